#include "qtpm/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace qtpm {

namespace {

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational Rational::make(int128 n, int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits64(n) || !fits64(d)) throw RationalOverflow("rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

Rational Rational::operator-() const {
    if (num_ == std::numeric_limits<std::int64_t>::min()) throw RationalOverflow("rational arithmetic overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::add(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) {
        std::int64_t n = 0;
        if (!__builtin_add_overflow(a.num_, b.num_, &n)) {
            Rational r;
            r.den_ = a.den_;
            r.num_ = n;
            if (r.den_ != 1) {
                const std::int64_t g = std::gcd(n, r.den_);
                if (g > 1) {
                    r.num_ /= g;
                    r.den_ /= g;
                }
            }
            return r;
        }
        return Rational::make(static_cast<int128>(a.num_) + b.num_, a.den_);
    }
    return Rational::make(static_cast<int128>(a.num_) * b.den_ + static_cast<int128>(b.num_) * a.den_,
                          static_cast<int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<int128>(a.num_) * b.num_, static_cast<int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational::make(static_cast<int128>(a.num_) * b.den_, static_cast<int128>(a.den_) * b.num_);
}

std::strong_ordering Rational::compare(const Rational& a, const Rational& b) {
    const int128 l = static_cast<int128>(a.num_) * b.den_;
    const int128 r = static_cast<int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational { throw std::invalid_argument("malformed number '" + std::string(text) + "'"); };
    if (text.empty()) return fail();

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t p = 0;
        std::int64_t q = 0;
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        auto r1 = std::from_chars(num.data(), num.data() + num.size(), p);
        auto r2 = std::from_chars(den.data(), den.data() + den.size(), q);
        if (r1.ec != std::errc{} || r1.ptr != num.data() + num.size() || r2.ec != std::errc{} ||
            r2.ptr != den.data() + den.size() || q == 0)
            return fail();
        return Rational(p, q);
    }

    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    int128 n = 0;
    int128 d = 1;
    bool digits = false;
    bool dot = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.' && !dot) {
            dot = true;
            continue;
        }
        if (c < '0' || c > '9') return fail();
        digits = true;
        n = n * 10 + (c - '0');
        if (dot) d *= 10;
        if (n > std::numeric_limits<std::int64_t>::max() || d > std::numeric_limits<std::int64_t>::max())
            throw RationalOverflow("number literal too long: '" + std::string(text) + "'");
    }
    if (!digits) return fail();
    return make(negative ? -n : n, d);
}

std::string Rational::to_string() const {
    std::int64_t d = den_;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

    const int digits = std::max(twos, fives);
    if (digits == 0) return std::to_string(num_);
    // Scale to a power-of-ten denominator; digits <= 63 keeps the factor in range
    // only for small denominators, so fall back to p/q when it would overflow.
    int128 scale = 1;
    for (int k = 0; k < digits; ++k) scale *= 10;
    const int128 scaled = static_cast<int128>(num_) * (scale / den_);
    if (!fits64(scaled)) return std::to_string(num_) + "/" + std::to_string(den_);
    const std::int64_t v = static_cast<std::int64_t>(scaled);
    const std::int64_t p10 = static_cast<std::int64_t>(scale);
    std::string frac = std::to_string((v < 0 ? -v : v) % p10);
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    const std::int64_t whole = (v < 0 ? -v : v) / p10;
    return (v < 0 ? "-" : "") + std::to_string(whole) + "." + frac;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace qtpm
