#include "qtpm/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace qtpm {

namespace {
constexpr Value kInf = std::numeric_limits<double>::infinity();
}

std::optional<Semiring> Semiring::from_name(std::string_view name) {
    if (name == "boolean") return boolean();
    if (name == "supinf") return supinf();
    if (name == "tropical") return tropical();
    return std::nullopt;
}

std::string_view Semiring::name() const {
    switch (kind_) {
    case SemiringKind::Boolean: return "boolean";
    case SemiringKind::SupInf: return "supinf";
    case SemiringKind::Tropical: return "tropical";
    }
    return "?";
}

Value Semiring::zero() const {
    switch (kind_) {
    case SemiringKind::Boolean: return 0.0;
    case SemiringKind::SupInf: return -kInf;
    case SemiringKind::Tropical: return kInf;
    }
    return 0.0;
}

Value Semiring::one() const {
    switch (kind_) {
    case SemiringKind::Boolean: return 1.0;
    case SemiringKind::SupInf: return kInf;
    case SemiringKind::Tropical: return 0.0;
    }
    return 0.0;
}

Value Semiring::oplus(Value a, Value b) const {
    switch (kind_) {
    case SemiringKind::Boolean:
    case SemiringKind::SupInf: return std::max(a, b);
    case SemiringKind::Tropical: return std::min(a, b);
    }
    return a;
}

Value Semiring::otimes(Value a, Value b) const {
    switch (kind_) {
    case SemiringKind::Boolean:
    case SemiringKind::SupInf: return std::min(a, b);
    case SemiringKind::Tropical:
        if (a == kInf || b == kInf) return kInf;
        if (a == -kInf || b == -kInf) return -kInf;
        return a + b;
    }
    return a;
}

Value Semiring::big_oplus(std::span<const Value> values) const {
    Value acc = zero();
    for (Value v : values) acc = oplus(acc, v);
    return acc;
}

Value Semiring::star(Value w) const {
    switch (kind_) {
    case SemiringKind::Boolean:
    case SemiringKind::SupInf: return one();
    case SemiringKind::Tropical: return w >= 0.0 ? 0.0 : -kInf;
    }
    return one();
}

std::string format_real(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    if (v == 0.0) return "0";  // also folds -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string Semiring::format(Value v) const {
    if (kind_ == SemiringKind::Boolean) return v != 0.0 ? "true" : "false";
    return format_real(v);
}

}  // namespace qtpm
