#pragma once

#include <cstddef>
#include <vector>

#include "qtpm/engine.hpp"
#include "qtpm/shortest_distance.hpp"

namespace qtpm {

// Reachable part of the whole-signal symbolic transition system. Time elapse
// may jump from a state to any later band (T_{j-1} < T < T_j) or boundary
// (T = T_j), collecting every value passed on the way; value sequences are
// kept in full.
struct OfflineGraph {
    std::vector<SymState> states;
    WeightedGraph graph;
    std::vector<std::size_t> initial;
    std::vector<std::size_t> accepting;  // accepting location, empty sequence, T = |sigma|
};

// Throws std::length_error when more than max_states states are reached.
OfflineGraph offline_wstts(const Signal& sigma, const TSWA& w, std::size_t max_states = 200000);

// Keeps only states lying on some initial-to-accepting path.
OfflineGraph trim(const OfflineGraph& g);

// Shortest distance from the initial to the accepting states of the trimmed
// graph, by the all-pairs closure.
Value offline_trace_value(const Signal& sigma, const TSWA& w);

}  // namespace qtpm
