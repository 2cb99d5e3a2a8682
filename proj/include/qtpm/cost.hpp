#pragma once

#include "qtpm/automaton.hpp"
#include "qtpm/signal.hpp"

namespace qtpm {

// Signed margin of one atom on one valuation: a(x) - d for > and >=, d - a(x) for < and <=.
double margin(const DataAtom& atom, ValuationView a);

// Whether the valuation satisfies the atom.
bool satisfies(const DataAtom& atom, ValuationView a);

// Cost of observing `seq` while the automaton sits in a location labelled `u`.
//
//   Boolean     conjunction of satisfaction over every element and atom
//   Robustness  infimum of the signed margins over every element and atom
//   Tropical    sum over elements of the sum of the atom margins
//
// The empty conjunction yields the semiring's multiplicative identity.
// Throws std::out_of_range if an atom refers to a variable the valuation lacks.
Value kappa(CostKind kind, const DataConstraint& u, const ValueSeq& seq);

// Cost of a single valuation (same as kappa on a one-element sequence).
Value kappa_one(CostKind kind, const DataConstraint& u, ValuationView a);

}  // namespace qtpm
