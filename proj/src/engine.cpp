#include "qtpm/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "qtpm/cost.hpp"
#include "qtpm/shortest_distance.hpp"

namespace qtpm {

std::size_t SymStateHash::operator()(const SymState& q) const {
    std::size_t h = q.zone.hash() ^ (q.location * 0x9e3779b97f4a7c15ULL);
    for (double d : q.values.flat()) h = (h ^ std::bit_cast<std::uint64_t>(d)) * 0x100000001b3ULL;
    return h;
}

void WeightSet::add(SymState q, Value s) {
    const std::size_t h = SymStateHash{}(q);
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
        Entry& e = entries_[it->second];
        if (e.state == q) {
            e.value = sr_.oplus(e.value, s);
            return;
        }
    }
    index_.emplace(h, entries_.size());
    entries_.push_back({std::move(q), s});
}

const Value* WeightSet::find(const SymState& q) const {
    auto [lo, hi] = index_.equal_range(SymStateHash{}(q));
    for (auto it = lo; it != hi; ++it)
        if (entries_[it->second].state == q) return &entries_[it->second].value;
    return nullptr;
}

void WeightSet::reindex() {
    index_.clear();
    for (std::size_t k = 0; k < entries_.size(); ++k) index_.emplace(SymStateHash{}(entries_[k].state), k);
}

std::size_t WeightSet::footprint() const {
    std::size_t n = entries_.size();
    for (const auto& e : entries_) n += e.state.values.size();
    return n;
}

SymbolicModel::SymbolicModel(TSA tsa, CostKind cost, Semiring sr)
    : tsa_(std::move(tsa)), cost_(cost), sr_(sr), out_(tsa_.locations.size()), co_reachable_(tsa_.locations.size()) {
    tsa_.validate();
    for (const auto& t : tsa_.transitions) {
        Edge e{t.target, {}, {}};
        for (const auto& g : t.guard) e.guard.push_back({g.clock + 1, g.op, Rational(g.constant)});
        for (auto r : t.resets) e.resets.push_back(r + 1);
        out_[t.source].push_back(std::move(e));
    }
    std::vector<std::size_t> work;
    for (std::size_t l = 0; l < tsa_.locations.size(); ++l)
        if (tsa_.locations[l].accepting) {
            co_reachable_[l] = true;
            work.push_back(l);
        }
    while (!work.empty()) {
        const auto l = work.back();
        work.pop_back();
        for (const auto& t : tsa_.transitions)
            if (t.target == l && !co_reachable_[t.source]) {
                co_reachable_[t.source] = true;
                work.push_back(t.source);
            }
    }
}

Value SymbolicModel::cost_of(std::size_t loc, const ValueSeq& seq) const {
    return kappa(cost_, tsa_.locations[loc].label, seq);
}

WeightSet SymbolicModel::initial_weight() const {
    WeightSet w(sr_, Rational(0));
    for (auto l : tsa_.initial_locations()) w.add({l, Zone::zero(dim()), {}}, sr_.one());
    return w;
}

namespace {

bool pinned_at(const Zone& z, std::size_t time_clock, const Rational& t) {
    return z.at(time_clock, 0) == Bound::le(t) && z.at(0, time_clock) == Bound::le(-t);
}

ValueSeq observe(const SymbolicModel& m, std::size_t loc, const ValueSeq& seq, const Valuation& a, bool truncate) {
    if (truncate && m.tsa().locations[loc].label.empty()) return ValueSeq({a});
    ValueSeq out = seq;
    out.push(a);
    return out;
}

void check_zone(const Zone& z, std::size_t time_clock, const Rational& horizon, const EngineOptions& opts) {
    if (!opts.check_invariants) return;
    if (!satisfies_time_bounds(z, time_clock, horizon))
        throw std::logic_error("zone violates 0 <= c <= T <= " + horizon.to_string() + ": " + z.to_string());
    if (opts.stats) ++opts.stats->zones_checked;
}

bool live(const SymbolicModel& m, const SymState& q) {
    Zone later = q.zone;
    later.elapse();
    for (const auto& e : m.edges_from(q.location)) {
        if (!m.can_accept(e.target)) continue;
        Zone now = q.zone;
        if (!now.intersect(e.guard).is_empty()) return true;
        Zone future = later;
        if (!future.intersect(e.guard).is_empty()) return true;
    }
    return false;
}

}  // namespace

Step advance(const SymbolicModel& m, const WeightSet& w, const Valuation& a, const Rational& hi,
             const EngineOptions& opts, Inside keep) {
    const Semiring sr = m.semiring();
    const Rational lo = w.frontier();
    if (!(lo < hi)) throw std::invalid_argument("segment must end after the current frontier");
    const std::size_t T = m.time_clock();

    std::unordered_map<SymState, std::size_t, SymStateHash> ids;
    std::vector<const SymState*> states;
    std::vector<Value> init;
    WeightedGraph g;

    auto intern = [&](SymState q) -> std::size_t {
        auto [it, fresh] = ids.try_emplace(std::move(q), states.size());
        if (fresh) {
            states.push_back(&it->first);
            init.push_back(sr.zero());
            check_zone(it->first.zone, T, hi, opts);
        }
        return it->second;
    };

    for (const auto& [q, s] : w.entries()) {
        const auto id = intern(q);
        init[id] = sr.oplus(init[id], s);
    }

    const TimeWindow band = TimeWindow::open(lo, hi);
    const TimeWindow wall = TimeWindow::punctual(hi);
    for (std::size_t k = 0; k < states.size(); ++k) {
        const SymState& q = *states[k];
        if (!q.values.empty()) {
            const Value cost = m.cost_of(q.location, q.values);
            if (cost != sr.zero())
                for (const auto& e : m.edges_from(q.location)) {
                    if (opts.prune && !m.can_accept(e.target)) continue;
                    Zone z = q.zone;
                    if (z.intersect(e.guard).is_empty()) continue;
                    z.reset(e.resets);
                    const auto id = intern({e.target, std::move(z), {}});
                    g.edges.push_back({k, id, cost});
                }
        }
        if (pinned_at(q.zone, T, hi)) continue;
        // Letting time pass only grows the sequence, so a state that can never
        // take a useful edge again has no successor worth keeping.
        if (opts.prune && !live(m, q)) continue;
        Zone up = q.zone;
        up.elapse();
        const ValueSeq seen = observe(m, q.location, q.values, a, opts.truncate_trivial_labels);
        for (const auto* window : {&band, &wall}) {
            Zone z = up;
            if (z.clamp_time(T, *window).is_empty()) continue;
            const auto id = intern({q.location, std::move(z), seen});
            if (id != k) g.edges.push_back({k, id, sr.one()});
        }
    }

    g.vertex_count = states.size();
    const auto val = propagate(g, init, sr);

    Step step{WeightSet(sr, hi), WeightSet(sr, lo), states.size()};
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (opts.prune && val[k] == sr.zero()) continue;
        const SymState& q = *states[k];
        if (pinned_at(q.zone, T, hi))
            step.at_end.add(q, val[k]);
        else if (keep == Inside::All ||
                 (keep == Inside::AcceptingOnly && (q.values.empty() && m.tsa().locations[q.location].accepting)))
            step.inside.add(q, val[k]);
    }
    if (opts.stats) {
        ++opts.stats->segments;
        opts.stats->explored_states += states.size();
    }
    return step;
}

WeightSet incr(const SymbolicModel& m, const Valuation& a, const Rational& t, const WeightSet& w,
               const EngineOptions& opts) {
    return advance(m, w, a, t, opts).at_end;
}

WeightSet incr_lt(const SymbolicModel& m, const Valuation& a, const Rational& t, const WeightSet& w,
                  const EngineOptions& opts) {
    return advance(m, w, a, t, opts).inside;
}

void prune(const SymbolicModel& m, WeightSet& w) {
    const Value zero = m.semiring().zero();
    w.erase_if([&](const SymState& q, Value s) { return s == zero || !live(m, q); });
}

namespace {

void record_peak(const WeightSet& w, const EngineOptions& opts) {
    if (!opts.stats) return;
    opts.stats->peak_weight_size = std::max(opts.stats->peak_weight_size, w.size());
    opts.stats->peak_footprint = std::max(opts.stats->peak_footprint, w.footprint());
}

}  // namespace

Value trace_value(const Signal& sigma, const TSWA& w, const EngineOptions& opts) {
    if (sigma.empty()) throw DomainError("empty signal");
    const Signal s = bind_variables(sigma, w.tsa.variables);
    const SymbolicModel m(w.tsa, w.cost, w.semiring);
    WeightSet weight = m.initial_weight();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (opts.prune && i > 0) prune(m, weight);
        weight = advance(m, weight, s.segments()[i].value, s.boundary(i + 1), opts, Inside::None).at_end;
        record_peak(weight, opts);
    }
    Value r = w.semiring.zero();
    for (const auto& [q, v] : weight.entries())
        if (q.values.empty() && m.tsa().locations[q.location].accepting) r = w.semiring.oplus(r, v);
    return r;
}

Monitor::Monitor(const TSWA& w, EngineOptions opts)
    : matching_(matching_automaton(w.tsa)),
      model_(matching_.tsa, w.cost, w.semiring),
      opts_(opts),
      weight_(model_.initial_weight()),
      matches_(w.semiring) {
    // Matches starting at t = 0 cannot go through the fresh initial location
    // (its outgoing edge needs a non-empty observation first), so the original
    // initial locations start alongside it.
    for (auto l0 : w.tsa.initial_locations()) weight_.add({l0, Zone::zero(model_.dim()), {}}, w.semiring.one());
}

void Monitor::harvest(const WeightSet& w, std::vector<Zone2D>& touched) {
    const Semiring sr = model_.semiring();
    for (const auto& [q, s] : w.entries()) {
        if (!q.values.empty() || !model_.tsa().locations[q.location].accepting || s == sr.zero()) continue;
        Zone z = project_match(q.zone, model_.time_clock(), matching_.start_clock + 1).zone();
        z.constrain(Zone2D::kT, Zone2D::kTPrime, Bound::lt(0));
        if (z.is_empty()) continue;
        Zone2D region(std::move(z));
        if (matches_.insert(region, s) != MatchSet::Insert::Unchanged) touched.push_back(std::move(region));
    }
}

std::vector<MatchPiece> Monitor::feed(const Segment& seg) {
    if (seg.duration.sign() <= 0) throw std::invalid_argument("segment duration must be positive");
    Step step = advance(model_, weight_, seg.value, now() + seg.duration, opts_, Inside::AcceptingOnly);
    std::vector<Zone2D> touched;
    harvest(step.inside, touched);
    harvest(step.at_end, touched);
    weight_ = std::move(step.at_end);
    if (opts_.prune) prune(model_, weight_);
    record_peak(weight_, opts_);

    std::vector<MatchPiece> out;
    std::set<Zone> seen;
    for (const auto& r : touched)
        if (seen.insert(r.zone()).second) out.push_back(*matches_.find(r));
    return out;
}

MatchSet match_signal(const Signal& sigma, const TSWA& w, const EngineOptions& opts) {
    const Signal s = bind_variables(sigma, w.tsa.variables);
    Monitor mon(w, opts);
    for (const auto& seg : s.segments()) mon.feed(seg);
    return mon.matches();
}

}  // namespace qtpm
