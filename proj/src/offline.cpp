#include "qtpm/offline.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "qtpm/cost.hpp"

namespace qtpm {

namespace {

// Position of a zone on the time axis: boundary j (T == T_j) or band j (T_{j-1} < T < T_j).
struct Cell {
    std::size_t index;
    bool band;
};

Cell cell_of(const Zone& z, std::size_t time_clock, const Signal& s) {
    // Guards may tighten T inside a band, so locate the cell from the lower bound.
    const Bound& lower = z.at(0, time_clock);
    const Rational v = -lower.value();
    for (std::size_t j = 0; j <= s.size(); ++j) {
        if (!lower.strict() && s.boundary(j) == v) return {j, false};
        if (s.boundary(j) > v) return {j, true};
    }
    throw std::logic_error("zone lies beyond the signal: " + z.to_string());
}

}  // namespace

OfflineGraph offline_wstts(const Signal& sigma, const TSWA& w, std::size_t max_states) {
    if (sigma.empty()) throw DomainError("empty signal");
    const Signal s = bind_variables(sigma, w.tsa.variables);
    const SymbolicModel m(w.tsa, w.cost, w.semiring);
    const Semiring sr = w.semiring;
    const std::size_t T = m.time_clock();
    const std::size_t n = s.size();

    OfflineGraph out;
    std::map<SymState, std::size_t> ids;
    std::deque<std::size_t> queue;
    auto intern = [&](SymState q) {
        auto [it, fresh] = ids.try_emplace(q, out.states.size());
        if (fresh) {
            if (out.states.size() >= max_states) throw std::length_error("symbolic state space exceeds the limit");
            out.states.push_back(std::move(q));
            queue.push_back(it->second);
        }
        return it->second;
    };

    for (auto l : w.tsa.initial_locations()) out.initial.push_back(intern({l, Zone::zero(m.dim()), {}}));

    while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        const SymState q = out.states[k];

        if (!q.values.empty()) {
            const Value cost = m.cost_of(q.location, q.values);
            for (const auto& e : m.edges_from(q.location)) {
                Zone z = q.zone;
                if (z.intersect(e.guard).is_empty()) continue;
                z.reset(e.resets);
                out.graph.edges.push_back({k, intern({e.target, std::move(z), {}}), cost});
            }
        }

        const Cell here = cell_of(q.zone, T, s);
        Zone up = q.zone;
        up.elapse();
        ValueSeq seen = q.values;
        // First segment observed when leaving this cell.
        std::size_t seg = here.band ? here.index : here.index + 1;
        if (seg > n) continue;
        seen.push(s.segments()[seg - 1].value);
        for (std::size_t j = seg; j <= n; ++j) {
            if (j > seg) seen.push(s.segments()[j - 1].value);
            for (bool band : {true, false}) {
                Zone z = up;
                const TimeWindow win = band ? TimeWindow::open(s.boundary(j - 1), s.boundary(j))
                                            : TimeWindow::punctual(s.boundary(j));
                if (z.clamp_time(T, win).is_empty()) continue;
                const auto id = intern({q.location, std::move(z), seen});
                if (id != k) out.graph.edges.push_back({k, id, sr.one()});
            }
        }
    }

    const Rational end = s.duration();
    for (std::size_t k = 0; k < out.states.size(); ++k) {
        const auto& q = out.states[k];
        if (!q.values.empty() || !w.tsa.locations[q.location].accepting) continue;
        const Cell c = cell_of(q.zone, T, s);
        if (!c.band && s.boundary(c.index) == end) out.accepting.push_back(k);
    }
    out.graph.vertex_count = out.states.size();
    return out;
}

OfflineGraph trim(const OfflineGraph& g) {
    const std::size_t n = g.states.size();
    std::vector<std::vector<std::size_t>> fwd(n);
    std::vector<std::vector<std::size_t>> bwd(n);
    for (const auto& e : g.graph.edges) {
        fwd[e.from].push_back(e.to);
        bwd[e.to].push_back(e.from);
    }
    auto sweep = [n](const std::vector<std::size_t>& seeds, const std::vector<std::vector<std::size_t>>& adj) {
        std::vector<bool> mark(n, false);
        std::vector<std::size_t> work(seeds.begin(), seeds.end());
        for (auto v : seeds) mark[v] = true;
        while (!work.empty()) {
            const auto v = work.back();
            work.pop_back();
            for (auto u : adj[v])
                if (!mark[u]) {
                    mark[u] = true;
                    work.push_back(u);
                }
        }
        return mark;
    };
    const auto from_init = sweep(g.initial, fwd);
    const auto to_acc = sweep(g.accepting, bwd);

    OfflineGraph out;
    std::vector<std::size_t> remap(n, n);
    for (std::size_t v = 0; v < n; ++v)
        if (from_init[v] && to_acc[v]) {
            remap[v] = out.states.size();
            out.states.push_back(g.states[v]);
        }
    for (const auto& e : g.graph.edges)
        if (remap[e.from] != n && remap[e.to] != n) out.graph.edges.push_back({remap[e.from], remap[e.to], e.weight});
    for (auto v : g.initial)
        if (remap[v] != n) out.initial.push_back(remap[v]);
    for (auto v : g.accepting)
        if (remap[v] != n) out.accepting.push_back(remap[v]);
    out.graph.vertex_count = out.states.size();
    return out;
}

Value offline_trace_value(const Signal& sigma, const TSWA& w) {
    const OfflineGraph g = trim(offline_wstts(sigma, w));
    return shortest_distance(g.graph, g.initial, g.accepting, w.semiring);
}

}  // namespace qtpm
