#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qtpm/matchset.hpp"

using namespace qtpm;

namespace {

// t in [t0, t1), t' in (p0, p1]
Zone2D box(Rational t0, Rational t1, Rational p0, Rational p1) {
    Zone z = Zone::universe(3);
    z.constrain(0, Zone2D::kT, Bound::le(-t0));
    z.constrain(Zone2D::kT, 0, Bound::lt(t1));
    z.constrain(0, Zone2D::kTPrime, Bound::lt(-p0));
    z.constrain(Zone2D::kTPrime, 0, Bound::le(p1));
    z.constrain(Zone2D::kT, Zone2D::kTPrime, Bound::lt(0));
    return Zone2D(std::move(z));
}

}  // namespace

TEST_CASE("insert merges identical regions with oplus") {
    MatchSet m(Semiring::supinf());
    CHECK(m.insert(box(0, 2, 1, 4), 3) == MatchSet::Insert::Added);
    CHECK(m.insert(box(0, 2, 1, 4), 1) == MatchSet::Insert::Unchanged);
    CHECK(m.insert(box(0, 2, 1, 4), 5) == MatchSet::Insert::Raised);
    CHECK(m.size() == 1);
    CHECK(m.find(box(0, 2, 1, 4))->value == 5);
    CHECK(m.find(box(0, 1, 1, 4)) == nullptr);
    CHECK(m.insert(Zone2D(Zone::empty(3)), 9) == MatchSet::Insert::Unchanged);
}

TEST_CASE("query takes oplus over covering pieces") {
    MatchSet m(Semiring::supinf());
    m.insert(box(0, 2, 1, 4), 3);
    m.insert(box(1, 3, 2, 6), 7);
    CHECK(m.query(Rational(1, 2), 3) == 3);
    CHECK(m.query(Rational(3, 2), 3) == 7);
    CHECK(m.query(5, 6) == -INFINITY);
    CHECK_THROWS_AS(m.query(3, 3), DomainError);
    CHECK_THROWS_AS(m.query(-1, 3), DomainError);
    MatchSet t(Semiring::tropical());
    t.insert(box(0, 2, 1, 4), 3);
    t.insert(box(1, 3, 2, 6), 7);
    CHECK(t.query(Rational(3, 2), 3) == 3);
}

TEST_CASE("text export uses interval notation") {
    MatchSet m(Semiring::supinf());
    m.insert(box(0, Rational(15, 2), 0, Rational(35, 2)), 5);
    std::ostringstream os;
    m.export_text(os);
    // the difference bound comes out tightened
    CHECK(os.str() == "t in [0,7.5), t' in (0,17.5], t'-t in (0,17.5] : 5\n");
}

TEST_CASE("grid export covers every ordered pair of grid points") {
    MatchSet m(Semiring::supinf());
    m.insert(box(0, 1, 0, 2), 4);
    std::ostringstream os;
    m.export_grid(os, Rational(1, 2), Rational(2));
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "t\tt'\tvalue");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 4 + 3 + 2 + 1);  // t in {0, .5, 1, 1.5}
    CHECK(os.str().find("0.5\t1.5\t4\n") != std::string::npos);
    CHECK(os.str().find("1\t1.5\t-inf\n") != std::string::npos);
    CHECK_THROWS_AS(m.export_grid(os, Rational(0), Rational(2)), DomainError);
}
