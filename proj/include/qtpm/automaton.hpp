#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtpm/errors.hpp"
#include "qtpm/semiring.hpp"
#include "qtpm/zone.hpp"

namespace qtpm {

// "x cmp d" over a signal variable (index into TSA::variables).
struct DataAtom {
    std::size_t var;
    Cmp op;
    double constant;
    friend bool operator==(const DataAtom&, const DataAtom&) = default;
};

// Conjunction of data atoms; empty means true.
using DataConstraint = std::vector<DataAtom>;

// "c cmp k" over an automaton clock (index into TSA::clocks), k a natural number.
struct ClockAtom {
    std::size_t clock;
    Cmp op;
    std::int64_t constant;
    friend bool operator==(const ClockAtom&, const ClockAtom&) = default;
};

struct Location {
    std::string name;
    DataConstraint label;
    bool initial = false;
    bool accepting = false;
    friend bool operator==(const Location&, const Location&) = default;
};

struct Transition {
    std::size_t source;
    std::vector<ClockAtom> guard;
    std::vector<std::size_t> resets;
    std::size_t target;
    friend bool operator==(const Transition&, const Transition&) = default;
};

// Timed symbolic automaton: a timed automaton whose locations are labelled
// with conjunctions of constraints over real-valued signal variables.
struct TSA {
    std::vector<std::string> variables;
    std::vector<std::string> clocks;
    std::vector<Location> locations;
    std::vector<Transition> transitions;

    std::vector<std::size_t> initial_locations() const;
    std::optional<std::size_t> find_location(std::string_view name) const;

    // Structural consistency (indices in range, guard constants >= 0,
    // at least one location). Throws std::invalid_argument.
    void validate() const;

    friend bool operator==(const TSA&, const TSA&) = default;
};

// Parses the specification language:
//
//   var x, y;
//   clock c;
//   location l0 init [x < 15];
//   location l1 [x > 5 && y <= 2];
//   location l2 accept [true];
//   edge l0 -> l1 when c < 5 reset {c};
//   edge l1 -> l2 when c < 10;
//
// Throws ParseError with line and column for lexical, syntactic and
// semantic problems (unknown names, duplicates, non-natural guard constants).
TSA parse_tsa(std::string_view text);
TSA parse_tsa_file(const std::string& path);

// Renders a TSA back to the specification language.
std::string to_dsl(const TSA& tsa);

// TSA extended with a fresh initial location and a fresh clock recording the
// start of the current match.
struct MatchingAutomaton {
    TSA tsa;
    std::size_t init_location;  // index of the fresh initial location
    std::size_t start_clock;    // index of the fresh clock in tsa.clocks
};

// Adds location l_init (label true, sole initial location) and clock T'
// (renamed if either name is taken), plus an edge from l_init to every original
// initial location that resets every clock including T'.
MatchingAutomaton matching_automaton(const TSA& tsa);

enum class CostKind { Boolean, Robustness, Tropical };

std::optional<CostKind> cost_from_name(std::string_view name);  // "b", "r", "t"
std::string_view cost_name(CostKind kind);
// The semiring each cost function is defined over.
Semiring natural_semiring(CostKind kind);

// A TSA paired with a cost function and the semiring it ranges over.
struct TSWA {
    TSA tsa;
    CostKind cost;
    Semiring semiring;

    // Throws std::invalid_argument when the cost/semiring pairing is not one of
    // boolean/b, supinf/r, tropical/t.
    TSWA(TSA tsa, CostKind cost, Semiring semiring);
};

}  // namespace qtpm
