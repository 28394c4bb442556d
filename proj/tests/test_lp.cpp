#include "ptri/lp.hpp"

#include <doctest.h>

using namespace ptri;

TEST_CASE("bounded maximum at a vertex") {
    // max x+y st x+2y <= 4, 3x+y <= 6
    SimplexLP lp(2);
    lp.add_le({{0, Rat(1)}, {1, Rat(2)}}, Rat(4));
    lp.add_le({{0, Rat(3)}, {1, Rat(1)}}, Rat(6));
    auto r = lp.maximize({{0, Rat(1)}, {1, Rat(1)}});
    REQUIRE(r.optimal());
    CHECK(r.value == Rat(14, 5));
    CHECK(r.x[0] == Rat(8, 5));
    CHECK(r.x[1] == Rat(6, 5));
}

TEST_CASE("infeasible system") {
    SimplexLP lp(1);
    lp.add_le({{0, Rat(1)}}, Rat(2));
    lp.add_ge({{0, Rat(1)}}, Rat(3));
    CHECK(lp.maximize({{0, Rat(1)}}).infeasible());
    CHECK_FALSE(lp.feasible());
}

TEST_CASE("unbounded direction with ray certificate") {
    SimplexLP lp(2);
    lp.add_le({{0, Rat(1)}, {1, Rat(-1)}}, Rat(1));
    auto r = lp.maximize({{1, Rat(1)}});
    REQUIRE(r.unbounded());
    REQUIRE(r.ray.size() == 2);
    CHECK(r.ray[1] > 0);
    // the ray must satisfy the recession inequality
    CHECK(r.ray[0] - r.ray[1] <= 0);
}

TEST_CASE("phase 1 needed: negative slack start") {
    // x >= 3, x <= 5
    SimplexLP lp(1);
    lp.add_ge({{0, Rat(1)}}, Rat(3));
    lp.add_le({{0, Rat(1)}}, Rat(5));
    auto mn = lp.minimize({{0, Rat(1)}});
    REQUIRE(mn.optimal());
    CHECK(mn.value == Rat(3));
    auto mx = lp.maximize({{0, Rat(1)}});
    CHECK(mx.value == Rat(5));
}

TEST_CASE("equality rows") {
    SimplexLP lp(2);
    lp.add_eq({{0, Rat(1)}, {1, Rat(1)}}, Rat(7));
    lp.add_le({{0, Rat(1)}}, Rat(2));
    auto r = lp.maximize({{0, Rat(1)}});
    REQUIRE(r.optimal());
    CHECK(r.value == Rat(2));
    CHECK(r.x[1] == Rat(5));
}

TEST_CASE("degenerate pivots terminate (Bland)") {
    SimplexLP lp(3);
    lp.add_le({{0, Rat(1)}, {1, Rat(1)}, {2, Rat(1)}}, Rat(0));
    lp.add_le({{0, Rat(1)}, {1, Rat(-1)}}, Rat(0));
    lp.add_le({{0, Rat(-1)}, {1, Rat(1)}}, Rat(0));
    auto r = lp.maximize({{0, Rat(1)}, {1, Rat(1)}, {2, Rat(1)}});
    REQUIRE(r.optimal());
    CHECK(r.value == Rat(0));
}

TEST_CASE("no variables, constant rows") {
    SimplexLP lp(0);
    lp.add_le({}, Rat(1));
    CHECK(lp.feasible());
    SimplexLP bad(0);
    bad.add_le({}, Rat(-1));
    CHECK_FALSE(bad.feasible());
}
