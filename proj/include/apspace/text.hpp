#ifndef APSPACE_TEXT_HPP
#define APSPACE_TEXT_HPP

#include <string>
#include <vector>

namespace apspace::text {

// Word/number tokens plus single-char punctuation tokens (",", ".", ...).
std::vector<std::string> tokenize(const std::string& s);

std::string lowercase(const std::string& s);
bool isPunct(const std::string& tok);

// Closed word classes used by the chunker and the normalizer.
bool isDeterminer(const std::string& lower);   // a, an, the
bool isBeForm(const std::string& lower);
bool isHaveForm(const std::string& lower);
bool isModal(const std::string& lower);
bool isAux(const std::string& lower);          // be/have/do/modal forms
bool isPreposition(const std::string& lower);
bool isPronoun(const std::string& lower);
bool isConjunction(const std::string& lower);  // and, or, but

// Embedded base-form verb list (chunker heuristics only; the Lexicon module
// owns the pattern identifier categories).
bool isKnownVerb(const std::string& lemmaLower);
bool looksLikeParticiple(const std::string& lower);  // -ed form or irregular table
bool looksLikeGerund(const std::string& lower);      // -ing form
bool isAdverb(const std::string& lower);             // -ly or closed adverb list

// Rule lemmatizer: lowercase in, lemma out. Irregular table, then verb
// suffixes validated against the known-verb list, then noun plural rules.
std::string lemma(const std::string& lower);

// lowercase + lemma for each token; punctuation passes through.
std::vector<std::string> normalize(const std::vector<std::string>& tokens);

std::string join(const std::vector<std::string>& tokens, std::size_t begin, std::size_t end);

// Deterministic sentence splitter for records that carry raw section text.
std::vector<std::string> splitSentences(const std::string& raw);

} // namespace apspace::text

#endif
