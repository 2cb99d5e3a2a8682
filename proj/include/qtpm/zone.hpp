#pragma once

// Difference-bound matrices over exact rationals.
//
// A zone of dimension n constrains variables x_0 .. x_{n-1} where x_0 is the
// constant-zero reference clock. Entry (i, j) bounds x_i - x_j by a pair
// (value, strict). Every public operation leaves the matrix in canonical
// (shortest-path closed) form, so two zones denote the same set iff their
// matrices are identical; that is what the weight maps rely on for dedup.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qtpm/rational.hpp"

namespace qtpm {

class Bound {
public:
    static Bound infinity() { return Bound(); }
    static Bound le(Rational v) { return Bound(v, false); }
    static Bound lt(Rational v) { return Bound(v, true); }

    bool is_infinite() const { return infinite_; }
    bool strict() const { return strict_; }
    const Rational& value() const { return value_; }

    friend Bound operator+(const Bound& a, const Bound& b) {
        if (a.infinite_ || b.infinite_) return Bound::infinity();
        return Bound(a.value_ + b.value_, a.strict_ || b.strict_);
    }
    friend bool operator==(const Bound&, const Bound&) = default;
    friend std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
        if (a.infinite_ || b.infinite_) {
            if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
            return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (auto c = a.value_ <=> b.value_; c != 0) return c;
        if (a.strict_ == b.strict_) return std::strong_ordering::equal;
        return a.strict_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    // Whether a concrete difference d satisfies "d < value" / "d <= value".
    bool admits(const Rational& d) const;

private:
    Bound() = default;
    Bound(Rational v, bool strict) : value_(v), strict_(strict), infinite_(false) {}

    Rational value_{};
    bool strict_ = true;
    bool infinite_ = true;
};

enum class Cmp { Lt, Le, Gt, Ge };

// Single-clock atom "x_clock cmp constant" on a zone index (>= 1).
struct ClockConstraint {
    std::size_t clock;
    Cmp op;
    Rational constant;
};

// Time window for the absolute-time clock.
struct TimeWindow {
    enum class Kind { Punctual, Open, HalfOpen };
    Kind kind;
    Rational lo;  // unused for Punctual
    Rational hi;

    static TimeWindow punctual(Rational at) { return {Kind::Punctual, at, at}; }
    static TimeWindow open(Rational lo, Rational hi) { return {Kind::Open, lo, hi}; }        // lo < T < hi
    static TimeWindow half_open(Rational lo, Rational hi) { return {Kind::HalfOpen, lo, hi}; }  // lo <= T < hi
};

class Zone {
public:
    // Every clock equal to zero.
    static Zone zero(std::size_t dim);
    // Every non-negative valuation.
    static Zone universe(std::size_t dim);
    static Zone empty(std::size_t dim);

    std::size_t dim() const { return dim_; }
    bool is_empty() const { return empty_; }
    const Bound& at(std::size_t i, std::size_t j) const { return m_[i * dim_ + j]; }

    // Adds x_i - x_j (<|<=) b and restores canonical form.
    Zone& constrain(std::size_t i, std::size_t j, const Bound& b);
    Zone& intersect(const ClockConstraint& c);
    Zone& intersect(std::span<const ClockConstraint> guard);
    Zone& intersect(const Zone& other);
    // Sets the listed clocks to zero.
    Zone& reset(std::span<const std::size_t> clocks);
    // Strict time elapse { v + d | v in Z, d > 0 }.
    Zone& elapse();
    Zone& clamp_time(std::size_t time_clock, const TimeWindow& w);

    // Set inclusion: every valuation of `other` is in *this.
    bool includes(const Zone& other) const;
    // Membership of a concrete valuation; point[0] is ignored (reference clock).
    bool contains(std::span<const Rational> point) const;

    friend bool operator==(const Zone& a, const Zone& b);
    friend std::strong_ordering operator<=>(const Zone& a, const Zone& b);
    std::size_t hash() const;

    // Full all-pairs tightening. Public operations call it already; exposed for
    // building zones entry-by-entry (see from_matrix).
    void canonicalize();
    static Zone from_matrix(std::size_t dim, std::vector<Bound> entries);

    // Conjunction of the non-trivial canonical constraints, e.g. "x1-x0<=5 && x0-x1<=-5".
    std::string to_string(std::span<const std::string> names = {}) const;

private:
    explicit Zone(std::size_t dim);
    Bound& ref(std::size_t i, std::size_t j) { return m_[i * dim_ + j]; }
    void close_from(std::size_t a, std::size_t b);
    void mark_empty();

    std::size_t dim_ = 0;
    bool empty_ = false;
    std::vector<Bound> m_;
};

struct ZoneHash {
    std::size_t operator()(const Zone& z) const { return z.hash(); }
};

// The zone restricted to clocks 0 <= c <= T <= horizon for every clock c.
bool satisfies_time_bounds(const Zone& z, std::size_t time_clock, const Rational& horizon);

// Region of the (t, t') plane, stored as a canonical 3x3 matrix over (0, t, t').
class Zone2D {
public:
    static constexpr std::size_t kT = 1;
    static constexpr std::size_t kTPrime = 2;

    explicit Zone2D(Zone z);

    const Zone& zone() const { return zone_; }
    bool is_empty() const { return zone_.is_empty(); }
    bool contains(const Rational& t, const Rational& t_prime) const;

    // "t in [a,b), t' in (c,d], t'-t in [e,f)"
    std::string to_string() const;

    friend bool operator==(const Zone2D&, const Zone2D&) = default;
    friend auto operator<=>(const Zone2D& a, const Zone2D& b) { return a.zone_ <=> b.zone_; }

private:
    Zone zone_;
};

// Projects a zone over [.., T, T'] onto (t, t') = (T - T', T).
Zone2D project_match(const Zone& z, std::size_t time_clock, std::size_t start_clock);

// Interval text "[a,b)" for the constraint pair lower: -(x) <= lo_bound, upper: x <= hi_bound.
std::string render_interval(const Bound& neg_lower, const Bound& upper);

}  // namespace qtpm
