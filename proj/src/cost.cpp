#include "qtpm/cost.hpp"

#include <algorithm>
#include <limits>

namespace qtpm {

namespace {

double lookup(const DataAtom& atom, ValuationView a) {
    if (atom.var >= a.size()) throw std::out_of_range("valuation has no entry for variable #" + std::to_string(atom.var));
    return a[atom.var];
}

}  // namespace

double margin(const DataAtom& atom, ValuationView a) {
    const double x = lookup(atom, a);
    switch (atom.op) {
    case Cmp::Gt:
    case Cmp::Ge: return x - atom.constant;
    case Cmp::Lt:
    case Cmp::Le: return atom.constant - x;
    }
    return 0.0;
}

bool satisfies(const DataAtom& atom, ValuationView a) {
    const double x = lookup(atom, a);
    switch (atom.op) {
    case Cmp::Lt: return x < atom.constant;
    case Cmp::Le: return x <= atom.constant;
    case Cmp::Gt: return x > atom.constant;
    case Cmp::Ge: return x >= atom.constant;
    }
    return false;
}

Value kappa_one(CostKind kind, const DataConstraint& u, ValuationView a) {
    switch (kind) {
    case CostKind::Boolean:
        return std::all_of(u.begin(), u.end(), [&](const DataAtom& atom) { return satisfies(atom, a); }) ? 1.0 : 0.0;
    case CostKind::Robustness: {
        double r = std::numeric_limits<double>::infinity();
        for (const auto& atom : u) r = std::min(r, margin(atom, a));
        return r;
    }
    case CostKind::Tropical: {
        double s = 0.0;
        for (const auto& atom : u) s += margin(atom, a);
        return s;
    }
    }
    return 0.0;
}

Value kappa(CostKind kind, const DataConstraint& u, const ValueSeq& seq) {
    const Semiring sr = natural_semiring(kind);
    Value acc = sr.one();
    if (u.empty()) return acc;
    for (std::size_t i = 0; i < seq.size(); ++i) acc = sr.otimes(acc, kappa_one(kind, u, seq[i]));
    return acc;
}

}  // namespace qtpm
