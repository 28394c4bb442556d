#include "ptri/polytope.hpp"

#include "gen.hpp"
#include "ptri/oracle.hpp"

#include <doctest.h>

using namespace ptri;

namespace {

// A = N x N
DiscretePolytope quadrant() {
    DiscretePolytope A;
    A.q = 2;
    A.levels.assign(2, Level{});
    A.levels[0] = Level{true, AffineMap::constant(Rat(0)), AffineMap::constant_inf()};
    A.levels[1] = Level{true, AffineMap::constant(Rat(0)), AffineMap::constant_inf()};
    return A;
}

// B = {(x,y) : 0 <= y <= x}
DiscretePolytope wedge() {
    DiscretePolytope B;
    B.q = 2;
    B.levels.assign(2, Level{});
    B.levels[0] = Level{true, AffineMap::constant(Rat(0)), AffineMap::constant_inf()};
    AffineMap nu;
    nu.coef[1] = 1;
    B.levels[1] = Level{true, AffineMap::constant(Rat(0)), nu};
    return B;
}

GammaPoint pt(std::initializer_list<long long> xs) {
    GammaPoint a;
    for (long long x : xs) a.push_back(x == -1 ? Gamma::infinity() : Gamma::of(x));
    return a;
}

} // namespace

TEST_CASE("membership incl. closure strata") {
    DiscretePolytope A = quadrant(), B = wedge();
    CHECK(contains(A, pt({3, 0})));
    CHECK_FALSE(contains(B, pt({2, 3})));
    CHECK(contains(B, pt({-1, 5}))); // (+inf, 5) lies in the face F_{2}(B)
    CHECK(strict_contains(B, pt({3, 2})));
    CHECK_FALSE(strict_contains(B, pt({-1, 5})));
}

TEST_CASE("faces of the quadrant and the wedge") {
    DiscretePolytope A = quadrant(), B = wedge();

    auto F1 = face(A, {1});
    REQUIRE(F1.has_value());
    CHECK(F1->support() == std::set<int>{1});
    CHECK(contains(*F1, pt({4, -1})));

    auto F2 = face(A, {2});
    REQUIRE(F2.has_value());
    CHECK(F2->support() == std::set<int>{2});

    CHECK_FALSE(face(B, {1}).has_value()); // empty per the example
    auto Fe = face(B, std::set<int>{});
    REQUIRE(Fe.has_value());
    CHECK(Fe->support().empty());
    CHECK(contains(*Fe, pt({-1, -1})));

    auto BF2 = face(B, {2});
    REQUIRE(BF2.has_value());
    CHECK(strict_contains(*BF2, pt({-1, 7})));
}

TEST_CASE("extension classification examples") {
    DiscretePolytope B = wedge();

    AffineMap f; // 2y - 2x
    f.coef[1] = Rat(-2);
    f.coef[2] = Rat(2);
    CHECK(extend_impl(f, B, {}).kind == ExtendKind::NotExtendable);

    AffineMap x = AffineMap::coordinate(1);
    CHECK(extend_impl(x, B, {2}).kind == ExtendKind::Infinite);

    AffineMap y = AffineMap::coordinate(2);
    Extension e = extend_impl(y, B, {2});
    REQUIRE(e.kind == ExtendKind::Finite);
    CHECK(e.g.coef == std::map<int, Rat>{{2, Rat(1)}});
    CHECK(e.g.c0 == 0);
}

TEST_CASE("extend_to_face guards empty faces") {
    DiscretePolytope B = wedge();
    AffineMap y = AffineMap::coordinate(2);
    CHECK_THROWS_AS(extend_to_face(y, B, {1}), EmptyFace);
}

TEST_CASE("project") {
    CHECK(project(pt({3, 5}), {1}) == pt({3, -1}));
    CHECK(project(pt({3, 5}), {1, 2}) == pt({3, 5}));
    CHECK(project(pt({-1, 5}), {}) == pt({-1, -1}));
}

TEST_CASE("simplex recognition") {
    SimplexReport ra = is_simplex(quadrant());
    CHECK_FALSE(ra.simplex);
    REQUIRE(ra.incomparable.has_value());
    CHECK(ra.incomparable->first == std::set<int>{1});
    CHECK(ra.incomparable->second == std::set<int>{2});

    SimplexReport rb = is_simplex(wedge());
    CHECK(rb.simplex);
    REQUIRE(rb.chain.size() == 3);
    CHECK(rb.chain[0] == std::set<int>{});
    CHECK(rb.chain[1] == std::set<int>{2});
    CHECK(rb.chain[2] == std::set<int>{1, 2});

    CHECK(is_simplex(DiscretePolytope::point(3)).simplex);
}

TEST_CASE("validation rejects bad presentations") {
    // mu = 1, nu = 0
    DiscretePolytope E;
    E.q = 1;
    E.levels.assign(1, Level{true, AffineMap::constant(Rat(1)), AffineMap::constant(Rat(0))});
    CHECK_FALSE(validate_polytope(E).valid);

    // the 2y-2x level: not largely continuous on the wedge (and negative)
    DiscretePolytope C = wedge();
    C.q = 3;
    AffineMap z;
    z.coef[1] = Rat(-2);
    z.coef[2] = Rat(2);
    C.levels.push_back(Level{true, z, z});
    CHECK_FALSE(validate_polytope(C).valid);

    CHECK(validate_polytope(wedge()).valid);
    CHECK(validate_polytope(quadrant()).valid);
}

TEST_CASE("set decisions: equality, subset, disjointness") {
    DiscretePolytope B = wedge();
    auto F = face(B, {2});
    REQUIRE(F.has_value());
    CHECK(set_equal(*F, *F));
    CHECK(set_subset(*F, *F));
    CHECK(set_disjoint(B, *F)); // different supports
    // translate of the wedge: x >= 5
    DiscretePolytope B5 = B;
    B5.levels[0].mu = AffineMap::constant(Rat(5));
    CHECK_FALSE(set_disjoint(B, B5));
    CHECK(set_subset(B5, B));
    CHECK_FALSE(set_subset(B, B5));
    // thin rational strip with no lattice point: 1/3 <= y - x... via mu=nu=x+1/2
    DiscretePolytope thin = B;
    AffineMap half;
    half.coef[1] = 1;
    half.c0 = Rat(1, 2);
    thin.levels[1] = Level{true, half, half};
    CHECK_FALSE(validate_polytope(thin).valid); // no integer point
}

TEST_CASE("face idempotence on random polytopes") {
    SplitMix64 rng(2024);
    int done = 0;
    while (done < 25) {
        DiscretePolytope A = testgen::random_polytope(rng, 3);
        auto faces = all_faces(A);
        if (faces.size() < 2) continue;
        for (auto& [Jp, Fp] : faces) {
            for (auto& [J, F] : faces) {
                if (!std::includes(Jp.begin(), Jp.end(), J.begin(), J.end())) continue;
                auto FF = face(Fp, J);
                auto FA = face(A, J);
                REQUIRE(FA.has_value());
                if (FF) CHECK(set_equal(*FF, *FA));
            }
        }
        ++done;
    }
}

TEST_CASE("finite extensions satisfy the projection law on samples") {
    SplitMix64 rng(555);
    int done = 0;
    while (done < 40) {
        DiscretePolytope A = testgen::random_polytope(rng, 3);
        std::set<int> supp = A.support();
        // random subset J
        std::set<int> J;
        for (int j : supp)
            if (rng.below(2) == 0) J.insert(j);
        AffineMap f = testgen::random_test_map(rng, supp);
        Extension e = extend_impl(f, A, J);
        if (e.kind != ExtendKind::Finite) continue;
        Window w{6, A.q};
        for (auto& a : enumerate_members(A, w, std::optional<std::set<int>>(supp))) {
            Omega lhs = f.eval(a);
            Omega rhs = e.g.eval(project(a, J));
            CHECK(lhs == rhs);
        }
        ++done;
    }
}
