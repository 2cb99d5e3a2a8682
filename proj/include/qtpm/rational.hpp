#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtpm {

__extension__ typedef __int128 int128;

// Thrown when an exact rational result does not fit the 64-bit representation.
class RationalOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Exact rational number with a normalized 64-bit numerator/denominator pair.
// Every operation either returns the exact result or throws RationalOverflow;
// no rounding ever happens. Used for time stamps, durations and zone bounds.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t n = 0;
        if (a.den_ == 1 && b.den_ == 1 && !__builtin_add_overflow(a.num_, b.num_, &n)) return Rational(n);
        return add(a, b);
    }
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        return compare(a, b);
    }

    // Accepts "12", "-3.25", "7/2", "1e-3" is rejected (no exponent syntax).
    static Rational parse(std::string_view text);

    // Finite decimal when the denominator allows it ("7.5"), "p/q" otherwise.
    std::string to_string() const;

private:
    static Rational make(int128 n, int128 d);
    static Rational add(const Rational& a, const Rational& b);
    static std::strong_ordering compare(const Rational& a, const Rational& b);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational midpoint(const Rational& a, const Rational& b);

}  // namespace qtpm

template <>
struct std::hash<qtpm::Rational> {
    std::size_t operator()(const qtpm::Rational& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 31u ^ std::hash<std::int64_t>{}(r.den());
    }
};
