#include "ptri/cells.hpp"

#include "gen.hpp"
#include "ptri/oracle.hpp"

#include <doctest.h>

using namespace ptri;

namespace {

PadicNumber pnum(long long p, const std::string& r) {
    return PadicNumber::from_rational(p, parse_rat(r));
}

// The running cell: p=3, N=2, M'=2, socle vU = N, c = 0, nu = 0, mu = u^2,
// lambda = 1 (the type-1 node of the three-node monoplex).
MonomialCell running_cell() {
    return testgen::three_node_monoplex(3).cells[2];
}

} // namespace

TEST_CASE("cell membership") {
    MonomialCell A = running_cell();
    PadicPoint x{pnum(3, "3")};
    CHECK(cell_member(A, x, pnum(3, "9")));
    CHECK_FALSE(cell_member(A, x, pnum(3, "3")));   // odd valuation
    CHECK_FALSE(cell_member(A, x, pnum(3, "18"))); // unit 2 not 1 mod 9
    CHECK(cell_member(A, x, pnum(3, "81")));        // nu = 0: smaller norms stay inside
    CHECK_FALSE(cell_member(A, x, pnum(3, "1")));   // |1| > |mu(x)| = |9|
}

TEST_CASE("type-0 cells are graphs") {
    CellularMonoplex M = testgen::three_node_monoplex(3);
    const MonomialCell& A1 = M.cells[1]; // graph of 0 over U1
    PadicPoint x{pnum(3, "3")};
    CHECK(cell_member(A1, x, PadicNumber::zero(3)));
    CHECK_FALSE(cell_member(A1, x, pnum(3, "9")));
}

TEST_CASE("fitting criterion") {
    MonomialCell A = running_cell();
    CHECK(is_fitting(A));
    MonomialCell B = A;
    B.mu.xi = pnum(3, "3"); // v = 1, not congruent to v(lambda) = 0 mod 2
    CHECK_FALSE(is_fitting(B));
    MonomialCell C = A;
    C.mu = MonomialFn::infinity();
    CHECK(is_fitting(C)); // the mu = infinity side is trivially fitting
    CHECK(is_fitting(testgen::three_node_monoplex(3).cells[1])); // type 0
}

TEST_CASE("boundedness of v(mu)") {
    MonomialCell A = running_cell();
    CHECK(check_bounded(A)); // v(mu) >= 0 >= -2

    // the boundary case: cell over a point socle with mu = p^{-M'}, N = 1
    MonomialCell E;
    E.socle.p = 3;
    E.socle.M = 2;
    E.socle.q = 0;
    E.socle.shape = DiscretePolytope::point(0);
    E.c = MonomialFn::monomial(pnum(3, "-1/9"), {});
    E.nu = MonomialFn::monomial(pnum(3, "1/9"), {});
    E.mu = MonomialFn::monomial(pnum(3, "1/9"), {});
    E.lambda = pnum(3, "1");
    E.N = 1;
    E.Mp = 2;
    E.type = 1;
    REQUIRE(validate_cell(E).valid);
    CHECK(is_fitting(E));
    CHECK(check_bounded(E)); // exactly -M'

    MonomialCell F = E;
    F.mu = MonomialFn::monomial(pnum(3, "1/27"), {});
    F.nu = F.mu;
    CHECK_FALSE(check_bounded(F)); // -M'-1 < -M'
}

TEST_CASE("boundary cells") {
    MonomialCell A = running_cell();
    // over the empty face: dropped exponent 2 > 0 kills mu
    auto b1 = boundary_cell(A, {}, 1);
    CHECK(b1.status == BoundaryResult::Status::Empty);
    auto b0 = boundary_cell(A, {}, 0);
    REQUIRE(b0.status == BoundaryResult::Status::Cell);
    CHECK(b0.cell.type == 0);
    CHECK(b0.cell.c.is_zero());
    CHECK(b0.cell.socle.supp().empty());

    // negative dropped exponent: no continuous extension
    MonomialCell B = A;
    B.mu = MonomialFn::monomial(pnum(3, "1"), {{1, -2}});
    auto bn = boundary_cell(B, {}, 1);
    CHECK(bn.status == BoundaryResult::Status::NotLargelyContinuous);

    // nu = 0 cell always has the graph boundary
    auto g = boundary_cell(A, {1}, 0);
    REQUIRE(g.status == BoundaryResult::Status::Cell);
    CHECK(g.cell.type == 0);
}

TEST_CASE("mu_v and the valuation identity") {
    MonomialCell A = running_cell();
    AffineMap mv = mu_v(A);
    // mu^v(a) = M' + beta0 + a = 2 + a
    CHECK(mv.c0 == Rat(2));
    CHECK(mv.coef == std::map<int, Rat>{{1, Rat(1)}});
    CHECK(nu_v(A).is_inf()); // nu = 0

    // identity v(mu(u)) = v(lambda) + N mu^v(vu) - N M' on samples
    SplitMix64 rng(11);
    for (auto& xr : sample_padic(A.socle, 5, 40, rng.next())) {
        PadicPoint u;
        for (auto& r : xr) u.push_back(PadicNumber::from_rational(3, r));
        long long vmu = A.mu.value(3, u).val_finite();
        GammaPoint vu = valuation_vector(u);
        Omega muv = mv.eval(vu);
        REQUIRE_FALSE(muv.is_inf());
        long long rhs = A.lambda.val_finite() +
                        A.N * numerator(muv.finite()).convert_to<long long>() - A.N * A.Mp;
        CHECK(vmu == rhs);
    }

    // min mu^v >= (N-1)(M'-1)
    auto mn = affine_min_over(A.socle.shape, mv);
    REQUIRE(mn.has_value());
    CHECK(*mn >= Rat((A.N - 1) * (A.Mp - 1)));
}

TEST_CASE("fitting agrees with the sampled sup/inf oracle") {
    // For each sampled socle point, enumerate t over the coset at valuations
    // around v(mu) and compare the sup of |t - c| with |mu|.
    SplitMix64 rng(404);
    int done = 0;
    while (done < 25) {
        CellularMonoplex M = testgen::random_monoplex(rng, 3);
        const MonomialCell& A = M.cells.back();
        if (A.type != 1 || A.mu.is_inf()) continue;
        REQUIRE(is_fitting(A));
        auto pts = sample_padic(A.socle, 3, 5, rng.next());
        for (auto& xr : pts) {
            PadicPoint x;
            for (auto& r : xr) x.push_back(PadicNumber::from_rational(3, r));
            PadicNumber mux = A.mu.value(3, x);
            long long vmu = mux.val_finite();
            // sup of |t - c| over sampled coset elements equals |mu|:
            // t - c = lambda p^{kN} (1 + p^{M'} j)
            long long kstar = (vmu - A.lambda.val_finite()) / A.N;
            bool attained = false;
            for (long long k = kstar - 2; k <= kstar + 2; ++k) {
                long long kN = k * A.N;
                PadicNumber delta = A.lambda.mul(PadicNumber::from_rational(
                    3, kN >= 0 ? Rat(pow_int(Int(3), static_cast<unsigned long long>(kN)))
                               : Rat(Int(1), pow_int(Int(3), static_cast<unsigned long long>(-kN)))));
                PadicNumber t = A.c.value(3, x).add(delta);
                bool inside = cell_member(A, x, t);
                if (inside) {
                    CHECK(delta.val_finite() >= vmu); // |delta| <= |mu|
                    if (delta.val_finite() == vmu) attained = true;
                }
            }
            CHECK(attained); // the fitting bound is realized
        }
        ++done;
    }
}

TEST_CASE("monoplex validation and perturbations") {
    CellularMonoplex M = testgen::three_node_monoplex(3);
    MonoplexReport rep = validate_monoplex(M);
    CHECK(rep.valid);
    CHECK(rep.rooted);
    CHECK(rep.closed);

    CellularMonoplex bad = M;
    bad.cells[2].lambda = pnum(3, "3"); // 0 <= v < N still, but coset shifts
    MonoplexReport r2 = validate_monoplex(bad);
    CHECK_FALSE(r2.valid);

    CellularMonoplex unrooted = M;
    unrooted.parent = {-1, -1, 1};
    MonoplexReport r3 = validate_monoplex(unrooted);
    CHECK_FALSE(r3.rooted);
}

TEST_CASE("transition checker") {
    CellularMonoplex M = testgen::three_node_monoplex(3);
    const MonomialCell& A2 = M.cells[2];
    const MonomialCell& A1 = M.cells[1];

    // samples of A1 (the graph): t = c(x) = 0... transitions need B inside A;
    // use B = A2 itself against A = A2 with h = 1, alpha = 0: ratio 1.
    std::vector<std::pair<PadicPoint, PadicNumber>> samples;
    SplitMix64 rng(5);
    for (auto& xr : sample_padic(A2.socle, 3, 10, rng.next())) {
        PadicPoint x;
        for (auto& r : xr) x.push_back(PadicNumber::from_rational(3, r));
        // t = c + lambda p^{2k} with k = v(x) so that member holds
        PadicNumber t = A2.mu.value(3, x); // |t - c| = |mu|: inside
        samples.emplace_back(x, t);
    }
    MonomialFn one = MonomialFn::monomial(pnum(3, "1"), {});
    CHECK(check_transition(A2, A2, one, 0, 2, samples));

    // alpha = 1 with a wrong-valuation h: ratio valuation nonzero
    MonomialFn h = MonomialFn::monomial(pnum(3, "3"), {{1, 2}});
    CHECK_FALSE(check_transition(A2, A2, h, 1, 2, samples));

    // correct h for alpha = 1 is mu itself here (t - c = mu(x))
    CHECK(check_transition(A2, A2, A2.mu, 1, 2, samples));

    (void)A1;
}

TEST_CASE("boundary partition of the closure at sampled points") {
    // For the three-node monoplex: every sampled closure point of A2 lies in
    // exactly one of A0, A1, A2.
    CellularMonoplex M = testgen::three_node_monoplex(3);
    SplitMix64 rng(17);
    std::vector<std::pair<PadicPoint, PadicNumber>> pts;
    // points of A2
    for (auto& xr : sample_padic(M.cells[2].socle, 3, 10, rng.next())) {
        PadicPoint x;
        for (auto& r : xr) x.push_back(PadicNumber::from_rational(3, r));
        pts.emplace_back(x, M.cells[2].mu.value(3, x));
    }
    // points of A1 and A0 (graphs)
    for (auto& xr : sample_padic(M.cells[1].socle, 3, 5, rng.next())) {
        PadicPoint x;
        for (auto& r : xr) x.push_back(PadicNumber::from_rational(3, r));
        pts.emplace_back(x, PadicNumber::zero(3));
    }
    pts.emplace_back(PadicPoint{PadicNumber::zero(3)}, PadicNumber::zero(3));

    for (auto& [x, t] : pts) {
        int count = 0;
        for (auto& A : M.cells)
            if (cell_member(A, x, t)) ++count;
        CHECK(count == 1);
    }
}
