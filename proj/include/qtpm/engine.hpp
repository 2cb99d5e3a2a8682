#pragma once

// Symbolic (zone-based) evaluation of a weighted timed symbolic automaton on a
// piecewise-constant signal, one segment at a time.
//
// Zone layout: index 0 is the reference clock, 1..m the automaton clocks in
// TSA order, m+1 the absolute-time clock T.

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "qtpm/automaton.hpp"
#include "qtpm/matchset.hpp"
#include "qtpm/signal.hpp"
#include "qtpm/zone.hpp"

namespace qtpm {

struct SymState {
    std::size_t location;
    Zone zone;
    ValueSeq values;  // observed since the last discrete transition

    friend bool operator==(const SymState&, const SymState&) = default;
    friend auto operator<=>(const SymState&, const SymState&) = default;
};

struct SymStateHash {
    std::size_t operator()(const SymState& q) const;
};

// Intermediate weight: symbolic states with their accumulated value, all
// sharing the time frontier T == frontier(). Entries keep insertion order.
class WeightSet {
public:
    struct Entry {
        SymState state;
        Value value;
    };

    WeightSet(Semiring sr, Rational frontier) : sr_(sr), frontier_(frontier) {}

    Semiring semiring() const { return sr_; }
    const Rational& frontier() const { return frontier_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Merges into an existing equal state with oplus.
    void add(SymState q, Value s);
    const Value* find(const SymState& q) const;

    // Entries plus stored valuations; the memory proxy reported by the monitor.
    std::size_t footprint() const;

    template <class Pred>
    void erase_if(Pred drop) {
        std::erase_if(entries_, [&](const Entry& e) { return drop(e.state, e.value); });
        reindex();
    }

private:
    void reindex();

    Semiring sr_;
    Rational frontier_;
    std::vector<Entry> entries_;
    // State hash -> positions in entries_; avoids storing every state twice.
    std::unordered_multimap<std::size_t, std::size_t> index_;
};

struct EngineStats {
    std::size_t segments = 0;
    std::size_t explored_states = 0;
    std::size_t zones_checked = 0;
    std::size_t peak_weight_size = 0;
    std::size_t peak_footprint = 0;
};

struct EngineOptions {
    // Drop entries that can no longer reach an accepting location, and entries
    // whose value is zero().
    bool prune = true;
    // Locations labelled true only need to know that something was observed;
    // keep just the latest valuation there.
    bool truncate_trivial_labels = true;
    // Check the time-bound and frontier invariants on every produced zone;
    // violations throw std::logic_error.
    bool check_invariants = false;
    EngineStats* stats = nullptr;
};

// Precomputed view of an automaton for symbolic exploration.
class SymbolicModel {
public:
    SymbolicModel(TSA tsa, CostKind cost, Semiring sr);

    const TSA& tsa() const { return tsa_; }
    CostKind cost() const { return cost_; }
    Semiring semiring() const { return sr_; }
    std::size_t dim() const { return tsa_.clocks.size() + 2; }
    std::size_t time_clock() const { return tsa_.clocks.size() + 1; }

    struct Edge {
        std::size_t target;
        std::vector<ClockConstraint> guard;  // on zone indices
        std::vector<std::size_t> resets;     // zone indices
    };
    const std::vector<Edge>& edges_from(std::size_t loc) const { return out_[loc]; }

    // Whether some accepting location is reachable from loc in the location graph
    // (loc itself counts).
    bool can_accept(std::size_t loc) const { return co_reachable_[loc]; }

    Value cost_of(std::size_t loc, const ValueSeq& seq) const;

    // All clocks zero at time 0, one state per initial location.
    WeightSet initial_weight() const;

private:
    TSA tsa_;
    CostKind cost_;
    Semiring sr_;
    std::vector<std::vector<Edge>> out_;
    std::vector<bool> co_reachable_;
};

// Outcome of reading one constant segment a on the window (lo, hi].
struct Step {
    WeightSet at_end;  // incr: states with T == hi
    WeightSet inside;  // incr_lt: states with T < hi
    std::size_t explored = 0;
};

// Which states with T < hi to report in Step::inside.
enum class Inside { All, AcceptingOnly, None };

// Builds the segment-local symbolic graph from w (frontier lo) and solves the
// shortest-distance problem from w's entries to every reached state.
Step advance(const SymbolicModel& m, const WeightSet& w, const Valuation& a, const Rational& hi,
             const EngineOptions& opts = {}, Inside keep = Inside::All);

WeightSet incr(const SymbolicModel& m, const Valuation& a, const Rational& t, const WeightSet& w,
               const EngineOptions& opts = {});
WeightSet incr_lt(const SymbolicModel& m, const Valuation& a, const Rational& t, const WeightSet& w,
                  const EngineOptions& opts = {});

// Removes entries that can no longer contribute to an accepting run.
void prune(const SymbolicModel& m, WeightSet& w);

// Value of the whole signal: fold incr over the segments, then oplus the
// accepting entries. Signal columns are matched to the automaton's variables
// by name. Throws DomainError on an empty signal.
Value trace_value(const Signal& sigma, const TSWA& w, const EngineOptions& opts = {});

// Online quantitative timed pattern matching over the matching automaton.
// Feed segments in order; each call returns the pieces that appeared or
// changed while reading that segment. Pieces for t' <= now() are final.
class Monitor {
public:
    explicit Monitor(const TSWA& w, EngineOptions opts = {});

    // The valuation is in automaton variable order.
    std::vector<MatchPiece> feed(const Segment& seg);

    const Rational& now() const { return weight_.frontier(); }
    const MatchSet& matches() const { return matches_; }
    const WeightSet& weight() const { return weight_; }
    const MatchingAutomaton& automaton() const { return matching_; }

private:
    void harvest(const WeightSet& w, std::vector<Zone2D>& touched);

    MatchingAutomaton matching_;
    SymbolicModel model_;
    EngineOptions opts_;
    WeightSet weight_;
    MatchSet matches_;
};

// Offline matching: feeds the whole signal to a Monitor.
MatchSet match_signal(const Signal& sigma, const TSWA& w, const EngineOptions& opts = {});

}  // namespace qtpm
