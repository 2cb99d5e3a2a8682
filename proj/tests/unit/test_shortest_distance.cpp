#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "qtpm/shortest_distance.hpp"

using namespace qtpm;

namespace {

WeightedGraph random_graph(std::mt19937_64& rng, Semiring sr, bool acyclic, bool nonneg = false) {
    std::uniform_int_distribution<std::size_t> n_dist(1, 8);
    WeightedGraph g;
    g.vertex_count = n_dist(rng);
    std::uniform_int_distribution<std::size_t> v(0, g.vertex_count - 1);
    std::uniform_int_distribution<int> w(nonneg ? 0 : -6, 9);
    std::uniform_int_distribution<int> m_dist(0, static_cast<int>(2 * g.vertex_count));
    const int m = m_dist(rng);
    for (int k = 0; k < m; ++k) {
        std::size_t a = v(rng), b = v(rng);
        if (acyclic) {
            if (a == b) continue;
            if (a > b) std::swap(a, b);
        }
        Value weight = w(rng);
        if (sr.kind() == SemiringKind::Boolean) weight = weight > 0 ? 1 : 0;
        g.edges.push_back({a, b, weight});
    }
    return g;
}

std::vector<std::size_t> all(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

const Semiring kAll[] = {Semiring::boolean(), Semiring::supinf(), Semiring::tropical()};

}  // namespace

TEST_CASE("three-path diamond gives max of mins") {
    // start -8-> a -2-> end, start -8-> a -7-> end', start -3-> b -7-> end
    WeightedGraph g{6, {{0, 1, 8}, {1, 5, 2}, {0, 2, 8}, {2, 5, 7}, {0, 3, 3}, {3, 5, 7}}};
    const std::size_t from[] = {0}, to[] = {5};
    CHECK(shortest_distance(g, from, to, Semiring::supinf()) == 7);
    CHECK(oracle::bf_shortest_distance(g, {0}, {5}, Semiring::supinf(), 16) == 7);
}

TEST_CASE("single vertex: the empty path has weight one") {
    WeightedGraph g{1, {}};
    const std::size_t v[] = {0};
    for (auto sr : kAll) CHECK(shortest_distance(g, v, v, sr) == sr.one());
}

TEST_CASE("closure matches bounded enumeration on acyclic graphs") {
    std::mt19937_64 rng(41);
    for (auto sr : kAll)
        for (int i = 0; i < 300; ++i) {
            const WeightedGraph g = random_graph(rng, sr, true);
            const auto c = path_closure(g, sr);
            for (std::size_t u = 0; u < g.vertex_count; ++u)
                for (std::size_t v = 0; v < g.vertex_count; ++v)
                    CHECK(c[u * g.vertex_count + v] == oracle::bf_shortest_distance(g, {u}, {v}, sr, g.vertex_count));
        }
}

TEST_CASE("closure matches the stabilized enumeration on cyclic sup-inf and boolean graphs") {
    std::mt19937_64 rng(42);
    for (auto sr : {Semiring::supinf(), Semiring::boolean()})
        for (int i = 0; i < 300; ++i) {
            const WeightedGraph g = random_graph(rng, sr, false);
            const std::size_t n = g.vertex_count;
            const auto c = path_closure(g, sr);
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    CHECK(c[u * n + v] == oracle::bf_shortest_distance(g, {u}, {v}, sr, n * n));
        }
}

TEST_CASE("tropical cycles: non-negative ones are harmless, negative ones give -inf") {
    std::mt19937_64 rng(43);
    const Semiring sr = Semiring::tropical();
    for (int i = 0; i < 300; ++i) {
        const WeightedGraph g = random_graph(rng, sr, false, true);
        const std::size_t n = g.vertex_count;
        const auto c = path_closure(g, sr);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) CHECK(c[u * n + v] == oracle::bf_shortest_distance(g, {u}, {v}, sr, n));
    }
    WeightedGraph neg{3, {{0, 1, 1}, {1, 2, -2}, {2, 1, 1}}};
    const std::size_t from[] = {0}, to[] = {2};
    CHECK(shortest_distance(neg, from, to, sr) == -INFINITY);
    Value prev = INFINITY;
    for (std::size_t k = 4; k <= 40; k += 4) {
        const Value bf = oracle::bf_shortest_distance(neg, {0}, {2}, sr, k);
        CHECK(bf < prev);
        prev = bf;
    }
}

TEST_CASE("propagate equals per-vertex shortest distance") {
    std::mt19937_64 rng(44);
    for (auto sr : kAll)
        for (int i = 0; i < 300; ++i) {
            const WeightedGraph g = random_graph(rng, sr, false);
            std::vector<Value> init(g.vertex_count, sr.zero());
            std::vector<std::size_t> sources;
            for (std::size_t v = 0; v < g.vertex_count; v += 2) {
                init[v] = sr.one();
                sources.push_back(v);
            }
            const auto val = propagate(g, init, sr);
            for (std::size_t v = 0; v < g.vertex_count; ++v) {
                const std::size_t to[] = {v};
                CHECK(val[v] == shortest_distance(g, sources, to, sr));
            }
        }
}

TEST_CASE("parallel edges merge with oplus") {
    WeightedGraph g{2, {{0, 1, 3}, {0, 1, 5}}};
    const std::size_t from[] = {0}, to[] = {1};
    CHECK(shortest_distance(g, from, to, Semiring::supinf()) == 5);
    CHECK(shortest_distance(g, from, to, Semiring::tropical()) == 3);
    CHECK(shortest_distance(g, from, all(2), Semiring::tropical()) == 0);
}
