#ifndef APSPACE_RATIONAL_HPP
#define APSPACE_RATIONAL_HPP

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace apspace {

// Exact rational on 64-bit words. Similarity weights are products and sums
// of small unit fractions, so magnitudes stay tiny; overflow still checked
// on every multiply/add via 128-bit intermediates.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rat operator+(const Rat& o) const {
        return fromWide(wide(num_) * o.den_ + wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Rat operator-(const Rat& o) const {
        return fromWide(wide(num_) * o.den_ - wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Rat operator*(const Rat& o) const {
        return fromWide(wide(num_) * o.num_, wide(den_) * o.den_);
    }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return fromWide(wide(num_) * o.den_, wide(den_) * o.num_);
    }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rat& o) const {
        wide l = wide(num_) * o.den_, r = wide(o.num_) * den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double toDouble() const { return double(num_) / double(den_); }

    // Half-up rounding to `places` decimals, kept exact (result den divides 10^places).
    Rat roundHalfUp(int places) const {
        std::int64_t pow10 = 1;
        for (int i = 0; i < places; ++i) pow10 *= 10;
        wide scaled = wide(num_) * pow10;
        wide q = scaled / den_, r = scaled % den_;
        if (r < 0) { r = -r; }
        if (2 * r >= wide(den_)) q += (num_ >= 0 ? 1 : -1);
        return fromWide(q, pow10);
    }

    // Fixed-point decimal rendering, half-up.
    std::string toDecimalString(int places) const {
        Rat r = roundHalfUp(places);
        std::int64_t pow10 = 1;
        for (int i = 0; i < places; ++i) pow10 *= 10;
        wide scaled = wide(r.num_) * (pow10 / r.den_);
        bool neg = scaled < 0;
        if (neg) scaled = -scaled;
        std::int64_t ip = std::int64_t(scaled / pow10), fp = std::int64_t(scaled % pow10);
        std::string frac = std::to_string(fp);
        frac.insert(frac.begin(), std::size_t(places) - frac.size(), '0');
        std::string out = (neg ? "-" : "") + std::to_string(ip);
        if (places > 0) out += "." + frac;
        return out;
    }

private:
    using wide = __int128;
    std::int64_t num_, den_;

    static Rat fromWide(wide n, wide d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        wide g = gcdWide(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rat r;
        r.num_ = std::int64_t(n);
        r.den_ = std::int64_t(d);
        return r;
    }
    static wide gcdWide(wide a, wide b) {
        while (b != 0) { wide t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    void normalize() { *this = fromWide(num_, den_); }
};

} // namespace apspace

#endif
