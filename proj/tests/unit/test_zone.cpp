#include <doctest.h>

#include <random>
#include <vector>

#include "qtpm/zone.hpp"

using namespace qtpm;

namespace {

// Random non-empty-ish zone over dim clocks built from a few difference constraints.
Zone random_zone(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> k(0, 12), idx(0, static_cast<int>(dim) - 1), coin(0, 1);
    Zone z = Zone::universe(dim);
    for (int c = 0; c < 4; ++c) {
        const auto a = static_cast<std::size_t>(idx(rng)), b = static_cast<std::size_t>(idx(rng));
        if (a == b) continue;
        const Rational v(k(rng) - 4, 2);
        z.constrain(a, b, coin(rng) ? Bound::lt(v) : Bound::le(v));
    }
    return z;
}

// Grid points with coordinates in {0, 1/2, ..., 8}; point[0] is the reference.
std::vector<std::vector<Rational>> grid(std::size_t dim) {
    std::vector<std::vector<Rational>> out{{Rational(0)}};
    for (std::size_t d = 1; d < dim; ++d) {
        std::vector<std::vector<Rational>> next;
        for (const auto& p : out)
            for (int v = 0; v <= 16; ++v) {
                auto q = p;
                q.push_back(Rational(v, 2));
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("bounds order strict below non-strict and infinity on top") {
    CHECK(Bound::lt(3) < Bound::le(3));
    CHECK(Bound::le(3) < Bound::lt(4));
    CHECK(Bound::le(100) < Bound::infinity());
    CHECK(Bound::lt(1) + Bound::le(2) == Bound::lt(3));
    CHECK((Bound::le(1) + Bound::infinity()).is_infinite());
}

TEST_CASE("canonicalize is idempotent and constrain keeps canonical form") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 500; ++i) {
        const Zone z = random_zone(rng, 4);
        Zone again = z;
        again.canonicalize();
        CHECK(again == z);
    }
}

TEST_CASE("elapse of a canonical zone is already canonical") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 500; ++i) {
        Zone z = random_zone(rng, 4);
        z.elapse();
        Zone again = z;
        again.canonicalize();
        CHECK(again == z);
    }
}

TEST_CASE("operations agree with pointwise semantics on a grid") {
    std::mt19937_64 rng(23);
    const auto pts = grid(3);
    for (int i = 0; i < 40; ++i) {
        const Zone a = random_zone(rng, 3), b = random_zone(rng, 3);
        Zone both = a;
        both.intersect(b);
        Zone reset = a;
        const std::size_t clocks[] = {1};
        reset.reset(clocks);
        Zone up = a;
        up.elapse();
        for (const auto& p : pts) {
            CHECK(both.contains(p) == (a.contains(p) && b.contains(p)));
            if (!a.contains(p)) continue;
            auto r = p;
            r[1] = 0;
            CHECK(reset.contains(r));
            auto later = p;
            for (std::size_t k = 1; k < later.size(); ++k) later[k] += Rational(1, 2);
            CHECK(up.contains(later));
        }
        // strict elapse never contains a point reachable only with zero delay from the zero zone
        Zone z0 = Zone::zero(3);
        z0.elapse();
        CHECK(!z0.contains(std::vector<Rational>{0, 0, 0}));
        CHECK(z0.contains(std::vector<Rational>{0, Rational(1, 4), Rational(1, 4)}));
    }
}

TEST_CASE("inclusion, emptiness and guards") {
    Zone z = Zone::universe(3);
    z.intersect(ClockConstraint{1, Cmp::Lt, Rational(5)});
    Zone w = z;
    w.intersect(ClockConstraint{1, Cmp::Gt, Rational(2)});
    CHECK(z.includes(w));
    CHECK(!w.includes(z));
    w.intersect(ClockConstraint{1, Cmp::Ge, Rational(5)});
    CHECK(w.is_empty());
    CHECK(z.includes(w));
}

TEST_CASE("clamp_time picks punctual and open windows") {
    Zone z = Zone::zero(3);
    z.elapse();
    Zone wall = z;
    wall.clamp_time(2, TimeWindow::punctual(Rational(7, 2)));
    CHECK(wall.contains(std::vector<Rational>{0, Rational(7, 2), Rational(7, 2)}));
    CHECK(!wall.contains(std::vector<Rational>{0, Rational(3), Rational(3)}));
    Zone band = z;
    band.clamp_time(2, TimeWindow::open(Rational(1), Rational(2)));
    CHECK(!band.contains(std::vector<Rational>{0, Rational(1), Rational(1)}));
    CHECK(band.contains(std::vector<Rational>{0, Rational(3, 2), Rational(3, 2)}));
    CHECK(satisfies_time_bounds(band, 2, Rational(2)));
    CHECK(!satisfies_time_bounds(z, 2, Rational(2)));
}

TEST_CASE("projection onto (t, t') and rendering") {
    // clocks: 0, T' (start clock), T; start between 1 and 2, now at 5
    Zone z = Zone::zero(3);
    z.elapse();
    z.clamp_time(2, TimeWindow::open(Rational(1), Rational(2)));
    const std::size_t start[] = {1};
    z.reset(start);
    z.elapse();
    z.clamp_time(2, TimeWindow::punctual(Rational(5)));
    const Zone2D r = project_match(z, 2, 1);
    CHECK(r.contains(Rational(3, 2), Rational(5)));
    CHECK(!r.contains(Rational(1), Rational(5)));
    CHECK(!r.contains(Rational(3, 2), Rational(4)));
    CHECK(r.to_string() == "t in (1,2), t' in [5,5], t'-t in (3,4)");
    CHECK_THROWS_AS(Zone2D(Zone::universe(4)), std::invalid_argument);
}

TEST_CASE("hash agrees with equality") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 200; ++i) {
        const Zone a = random_zone(rng, 3);
        Zone b = Zone::universe(3);
        b.intersect(a);
        CHECK(a == b);
        CHECK(a.hash() == b.hash());
    }
}
