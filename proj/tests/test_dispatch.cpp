#include "ptri/dispatch.hpp"

#include "gen.hpp"
#include "ptri/oracle.hpp"

#include <doctest.h>

using namespace ptri;

namespace {

PadicNumber pnum(long long p, const std::string& r) {
    return PadicNumber::from_rational(p, parse_rat(r));
}

} // namespace

TEST_CASE("three-node dispatch matches the hand execution") {
    CellularMonoplex M = testgen::three_node_monoplex(3);
    DispatchResult d = dispatch(M);
    CHECK(d.P[0].empty());
    CHECK(d.P[1] == std::set<long long>{1});
    CHECK(d.P[2] == std::set<long long>{1});
    CHECK(d.H[0].empty());
    CHECK(d.H[1] == std::set<long long>{1});
    CHECK(d.H[2] == std::set<long long>{1, 2});
    CHECK(d.sigma[1].at(1) == 1);
    CHECK(d.sigma[2].at(1) == 1);
    CHECK(d.r[2] == 2);
    CHECK(d.q2 == 2);
}

TEST_CASE("single point cell") {
    CellularMonoplex M = testgen::three_node_monoplex(3);
    M.cells.resize(1);
    M.socle_of.resize(1);
    M.parent = {-1};
    DispatchResult d = dispatch(M);
    CHECK(d.H[0].empty());
    CHECK(d.P[0].empty());
    CHECK(d.q2 == 0);
}

TEST_CASE("face-stricte violation: equal socle without type flip") {
    CellularMonoplex M = testgen::three_node_monoplex(3);
    // duplicate the graph cell on top of itself: parent and child both type 0
    M.cells.push_back(M.cells[1]);
    M.socle_of.push_back(M.socle_of[1]);
    M.parent.push_back(1);
    try {
        dispatch(M);
        FAIL("expected PreconditionViolation");
    } catch (const PreconditionViolation& e) {
        CHECK(e.claim == "face-stricte");
    }
}

TEST_CASE("faces-UA violation: a socle face carries no cell") {
    // A single type-1 cell whose center is not largely continuous toward any
    // face, so no boundary cell exists; the socle faces are then uncovered.
    long long p = 3;
    CellularMonoplex M;
    M.U.p = p;
    M.U.M = 2;
    PadicSimplex U1;
    U1.p = p;
    U1.M = 2;
    U1.q = 1;
    U1.shape.q = 1;
    U1.shape.levels.assign(1, Level{true, AffineMap::constant(Rat(0)), AffineMap::constant_inf()});
    PadicSimplex U0 = U1;
    U0.shape = DiscretePolytope::point(1);
    M.U.blocks.push_back(Block{1, true, {U0, U1}});

    MonomialCell A;
    A.socle = U1;
    A.c = MonomialFn::monomial(pnum(p, "1"), {{1, -1}}); // u^{-1}: not l.c. at 0
    A.nu = MonomialFn::zero();
    A.mu = MonomialFn::monomial(pnum(p, "1"), {{1, 2}});
    A.lambda = pnum(p, "1");
    A.N = 2;
    A.Mp = 2;
    A.type = 1;
    // the graph cell over U1 (nu = 0) so the one-node family is not closed but valid
    MonomialCell G = A;
    G.c = A.c;
    G.nu = MonomialFn::zero();
    G.mu = MonomialFn::zero();
    G.lambda = PadicNumber::zero(p);
    G.type = 0;
    M.cells = {G, A};
    M.socle_of = {SimplexRef{0, 1}, SimplexRef{0, 1}};
    M.parent = {-1, 0};
    try {
        dispatch(M);
        FAIL("expected PreconditionViolation");
    } catch (const PreconditionViolation& e) {
        CHECK(e.claim == "faces-UA");
    }
}

TEST_CASE("lift of the three-node monoplex") {
    CellularMonoplex M = testgen::three_node_monoplex(3);
    DispatchResult d = dispatch(M);
    LiftedComplex L = build_lift(M, d);

    // vS_{A2} = {(a1, a2): a1 in N, a2 >= 2 + a1}
    const DiscretePolytope& S2 = L.S[2].shape;
    CHECK(S2.support() == std::set<int>{1, 2});
    CHECK(strict_contains(S2, {Gamma::of(1), Gamma::of(3)}));
    CHECK_FALSE(strict_contains(S2, {Gamma::of(1), Gamma::of(2)}));
    CHECK(L.S[1].shape.support() == std::set<int>{1});
    CHECK(L.S[0].shape.support().empty());

    // phi on y = (3, 27): the worked example
    PadicPoint y{pnum(3, "3"), pnum(3, "27")};
    PhiValue v = eval_phi(L, y);
    CHECK(v.node == 2);
    REQUIRE(v.x.size() == 1);
    CHECK(v.x[0].eq(pnum(3, "3")));
    CHECK(v.t.eq(pnum(3, "9")));
    CHECK(cell_member(M.cells[2], v.x, v.t));

    // Phi is the coordinate selection
    PadicPoint u = eval_Phi(L, y, 2);
    CHECK(u[0].eq(pnum(3, "3")));

    // invert_phi round-trips
    PadicPoint back = invert_phi(L, 2, v.x, v.t);
    REQUIRE(back.size() == 2);
    CHECK(back[0].eq(y[0]));
    CHECK(back[1].valuation() == Gamma::of(3));

    // type-0 node: phi = (Phi, c)
    PadicPoint y1{pnum(3, "3"), PadicNumber::zero(3)};
    PhiValue v1 = eval_phi(L, y1);
    CHECK(v1.node == 1);
    CHECK(v1.t.is_zero());

    // not-in-cell rejection
    CHECK_THROWS_AS(invert_phi(L, 2, v.x, pnum(3, "3")), NotInCell);
}

TEST_CASE("random monoplexes dispatch and lift") {
    SplitMix64 rng(31337);
    int done = 0;
    while (done < 8) {
        CellularMonoplex M = testgen::random_monoplex(rng, done % 2 == 0 ? 3 : 2);
        MonoplexReport rep = validate_monoplex(M);
        REQUIRE(rep.valid);
        REQUIRE(rep.rooted);
        DispatchResult d = dispatch(M); // re-verifies (C0)-(C5)
        LiftedComplex L = build_lift(M, d); // certifies the face and image laws
        // sampled round trips
        for (size_t a = 0; a < M.cells.size(); ++a) {
            auto pts = sample_padic(L.S[a], static_cast<long long>(M.cells[a].Mp) + 3, 5,
                                    rng.next());
            for (auto& yr : pts) {
                PadicPoint y;
                for (auto& r : yr) y.push_back(PadicNumber::from_rational(L.lifted.p, r));
                PhiValue v = eval_phi_at(L, y, static_cast<int>(a));
                CHECK(cell_member(M.cells[a], v.x, v.t));
                PadicPoint back = invert_phi(L, static_cast<int>(a), v.x, v.t);
                for (size_t k = 0; k < y.size(); ++k) {
                    CHECK(back[k].valuation() == y[k].valuation());
                    if (!y[k].is_zero())
                        CHECK(back[k].unit_mod(2) == y[k].unit_mod(2));
                }
            }
        }
        ++done;
    }
}
