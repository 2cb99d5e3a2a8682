#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace qtpm {

// Scalar carrier shared by all instances. Boolean uses 0.0 (false) / 1.0 (true);
// the real-valued instances use the extended reals with +-infinity. NaN never occurs.
using Value = double;

enum class SemiringKind { Boolean, SupInf, Tropical };

// Run-time selected complete idempotent semiring.
//
//   Boolean   ({false,true}, or, and, false, true)
//   SupInf    (R u {-inf,+inf}, max, min, -inf, +inf)
//   Tropical  (R u {-inf,+inf}, min, +, +inf, 0)
//
// The tropical carrier includes -inf so that sums over negative cycles stay in
// the carrier. +inf is absorbing for otimes; otherwise -inf wins.
class Semiring {
public:
    constexpr explicit Semiring(SemiringKind kind) : kind_(kind) {}

    static Semiring boolean() { return Semiring(SemiringKind::Boolean); }
    static Semiring supinf() { return Semiring(SemiringKind::SupInf); }
    static Semiring tropical() { return Semiring(SemiringKind::Tropical); }

    // Accepts the CLI spellings "boolean", "supinf", "tropical".
    static std::optional<Semiring> from_name(std::string_view name);

    SemiringKind kind() const { return kind_; }
    std::string_view name() const;

    Value zero() const;
    Value one() const;
    Value oplus(Value a, Value b) const;
    Value otimes(Value a, Value b) const;
    Value big_oplus(std::span<const Value> values) const;
    // Closure e_otimes + w + w*w + ...
    Value star(Value w) const;
    // a <= b in the canonical order, i.e. a + b == b.
    bool canonical_leq(Value a, Value b) const { return oplus(a, b) == b; }

    // Text rendering: true/false for Boolean; inf, -inf or shortest decimal otherwise.
    std::string format(Value v) const;

    friend bool operator==(const Semiring&, const Semiring&) = default;

private:
    SemiringKind kind_;
};

// Shortest round-trip decimal rendering of a double, "inf"/"-inf" for infinities.
std::string format_real(double v);

}  // namespace qtpm
