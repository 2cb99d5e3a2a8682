#pragma once

// Brute-force references for the test suites. Nothing here touches Zone or the
// engine's graph construction: runs are enumerated directly from the timed
// semantics and checked with a private difference-constraint solver.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "qtpm/automaton.hpp"
#include "qtpm/engine.hpp"
#include "qtpm/matchset.hpp"
#include "qtpm/offline.hpp"
#include "qtpm/shortest_distance.hpp"
#include "qtpm/signal.hpp"

namespace oracle {

using qtpm::Rational;
using qtpm::Semiring;
using qtpm::Value;

// Oplus over every path of at most k edges from `from` to `to` (the empty
// path included), by plain dynamic programming over path length.
Value bf_shortest_distance(const qtpm::WeightedGraph& g, const std::vector<std::size_t>& from,
                           const std::vector<std::size_t>& to, Semiring sr, std::size_t k = 64);

// Trace value by enumerating discrete runs of at most max_transitions
// transitions. Each transition time is placed on a boundary or inside a band
// of the signal; feasibility of the resulting timing constraints is decided
// exactly. Exact whenever every accepting run has at most max_transitions
// transitions (always true for acyclic automata with max_transitions >= |L|).
Value wtts_trace_value(const qtpm::Signal& sigma, const qtpm::TSWA& w, std::size_t max_transitions);

// Whether sigma([t, t')) has an accepting run, using Boolean satisfaction.
bool qualitative_match(const qtpm::Signal& sigma, const qtpm::TSA& a, const Rational& t, const Rational& t_prime,
                       std::size_t max_transitions);

bool same_value(Value a, Value b, double tol = 0.0);

// Incremental trace value equals the offline symbolic shortest distance.
bool check_incremental(const qtpm::Signal& sigma, const qtpm::TSWA& w, const qtpm::EngineOptions& opts = {});

// Sample points from the arrangement of segment boundaries and piece bounds:
// every candidate coordinate plus midpoints, (t, t') with 0 <= t < t' <= |sigma|.
// At most `cap` points, picked deterministically from rng when there are more.
std::vector<std::pair<Rational, Rational>> arrangement_samples(const qtpm::Signal& sigma, const qtpm::MatchSet& m,
                                                               std::mt19937_64& rng, std::size_t cap);

struct PointMismatch {
    Rational t, t_prime;
    Value from_matches, from_restriction;
};

// query(t, t') == trace_value(sigma([t, t')), w) at every sample.
std::vector<PointMismatch> check_qtpm_pointwise(const qtpm::Signal& sigma, const qtpm::TSWA& w,
                                                const qtpm::MatchSet& m,
                                                const std::vector<std::pair<Rational, Rational>>& samples,
                                                double tol, const qtpm::EngineOptions& opts = {});

// Random small instances.
struct InstanceShape {
    std::size_t max_locations = 4;
    std::size_t max_clocks = 2;
    std::size_t max_segments = 5;
    std::size_t max_transitions = 6;
    bool acyclic = false;
};

qtpm::TSA random_tsa(std::mt19937_64& rng, const InstanceShape& shape);
qtpm::Signal random_signal(std::mt19937_64& rng, const std::vector<std::string>& variables,
                           const InstanceShape& shape);

}  // namespace oracle
