#include "qtpm/shortest_distance.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace qtpm {

namespace {

// In-place closure of an n x n matrix holding single-edge weights. On return
// the matrix holds the oplus over all non-empty paths.
void close_nonempty(std::vector<Value>& a, std::size_t n, Semiring sr) {
    std::vector<Value> row(n);
    std::vector<Value> col(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Value loop = sr.star(a[k * n + k]);
        for (std::size_t i = 0; i < n; ++i) {
            row[i] = a[k * n + i];
            col[i] = a[i * n + k];
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (col[i] == sr.zero()) continue;
            const Value head = sr.otimes(col[i], loop);
            for (std::size_t j = 0; j < n; ++j) {
                if (row[j] == sr.zero()) continue;
                Value& cell = a[i * n + j];
                cell = sr.oplus(cell, sr.otimes(head, row[j]));
            }
        }
    }
}

}  // namespace

std::vector<Value> path_closure(const WeightedGraph& g, Semiring sr) {
    const std::size_t n = g.vertex_count;
    std::vector<Value> a(n * n, sr.zero());
    for (const auto& e : g.edges) {
        if (e.from >= n || e.to >= n) throw std::out_of_range("edge endpoint out of range");
        a[e.from * n + e.to] = sr.oplus(a[e.from * n + e.to], e.weight);
    }
    close_nonempty(a, n, sr);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = sr.oplus(a[i * n + i], sr.one());
    return a;
}

Value shortest_distance(const WeightedGraph& g, std::span<const std::size_t> from, std::span<const std::size_t> to,
                        Semiring sr) {
    const auto a = path_closure(g, sr);
    const std::size_t n = g.vertex_count;
    Value acc = sr.zero();
    for (auto u : from)
        for (auto v : to) acc = sr.oplus(acc, a[u * n + v]);
    return acc;
}

std::vector<Value> propagate(const WeightedGraph& g, std::span<const Value> init, Semiring sr) {
    const std::size_t n = g.vertex_count;
    if (init.size() != n) throw std::invalid_argument("initial weights do not match the vertex count");

    // Edges grouped by source: out_edges[first[v] .. first[v+1]).
    std::vector<std::size_t> first(n + 1, 0);
    for (const auto& e : g.edges) {
        if (e.from >= n || e.to >= n) throw std::out_of_range("edge endpoint out of range");
        ++first[e.from + 1];
    }
    for (std::size_t v = 0; v < n; ++v) first[v + 1] += first[v];
    std::vector<std::size_t> out_edges(g.edges.size());
    {
        std::vector<std::size_t> fill(first.begin(), first.end() - 1);
        for (std::size_t k = 0; k < g.edges.size(); ++k) out_edges[fill[g.edges[k].from]++] = k;
    }
    auto out = [&](std::size_t v) { return std::span(out_edges).subspan(first[v], first[v + 1] - first[v]); };

    // Iterative Tarjan; components come out in reverse topological order.
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::size_t> comp_of(n, 0);
    // Components stored back to back: members[comp_first[c] .. comp_first[c+1]).
    std::vector<std::size_t> members;
    std::vector<std::size_t> comp_first{0};
    std::size_t counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t next_edge;
    };
    std::vector<Frame> call;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next_edge < first[f.v + 1] - first[f.v]) {
                const std::size_t w = g.edges[out_edges[first[f.v] + f.next_edge++]].to;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const std::size_t v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                const std::size_t start = members.size();
                std::size_t w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp_of[w] = comp_first.size() - 1;
                    members.push_back(w);
                } while (w != v);
                std::sort(members.begin() + static_cast<std::ptrdiff_t>(start), members.end());
                comp_first.push_back(members.size());
            }
        }
    }

    std::vector<Value> in(init.begin(), init.end());
    std::vector<Value> val(n, sr.zero());
    std::vector<std::size_t> local(n, 0);
    for (auto c = comp_first.size() - 1; c-- > 0;) {
        const auto comp = std::span(members).subspan(comp_first[c], comp_first[c + 1] - comp_first[c]);
        const std::size_t m = comp.size();
        bool cyclic = m > 1;
        if (!cyclic)
            for (auto k : out(comp[0]))
                if (g.edges[k].to == comp[0]) cyclic = true;

        if (!cyclic) {
            val[comp[0]] = in[comp[0]];
        } else {
            for (std::size_t i = 0; i < m; ++i) local[comp[i]] = i;
            std::vector<Value> a(m * m, sr.zero());
            for (auto u : comp)
                for (auto k : out(u)) {
                    const auto& e = g.edges[k];
                    if (comp_of[e.to] != c) continue;
                    Value& cell = a[local[u] * m + local[e.to]];
                    cell = sr.oplus(cell, e.weight);
                }
            close_nonempty(a, m, sr);
            for (std::size_t i = 0; i < m; ++i) a[i * m + i] = sr.oplus(a[i * m + i], sr.one());
            for (std::size_t j = 0; j < m; ++j) {
                Value acc = sr.zero();
                for (std::size_t i = 0; i < m; ++i) acc = sr.oplus(acc, sr.otimes(in[comp[i]], a[i * m + j]));
                val[comp[j]] = acc;
            }
        }
        for (auto u : comp) {
            if (val[u] == sr.zero()) continue;
            for (auto k : out(u)) {
                const auto& e = g.edges[k];
                if (comp_of[e.to] == c) continue;
                in[e.to] = sr.oplus(in[e.to], sr.otimes(val[u], e.weight));
            }
        }
    }
    return val;
}

}  // namespace qtpm
