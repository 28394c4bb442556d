#include "ptri/gooddir.hpp"

#include "ptri/oracle.hpp"

#include <doctest.h>

using namespace ptri;

namespace {

// polynomials in X (m=1) and T: exponent tuples [eX, eT]
Polynomial poly1(std::initializer_list<std::pair<std::vector<int>, Rat>> terms) {
    Polynomial f = Polynomial::zero(1);
    for (auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

} // namespace

TEST_CASE("leading forms") {
    Polynomial f = poly1({{{0, 2}, Rat(1)}, {{1, 0}, Rat(-1)}}); // T^2 - X
    Polynomial lead = leading_form({f});
    CHECK(lead.terms == std::map<std::vector<int>, Rat>{{{0, 2}, Rat(1)}}); // T^2

    Polynomial g = poly1({{{1, 1}, Rat(1)}, {{0, 0}, Rat(-1)}}); // XT - 1
    CHECK(leading_form({g}).terms == std::map<std::vector<int>, Rat>{{{1, 1}, Rat(1)}});

    // (X - T)(T^2 - X): top-degree part of the product
    Polynomial h = poly1({{{1, 0}, Rat(1)}, {{0, 1}, Rat(-1)}});
    Polynomial lead2 = leading_form({h, f});
    CHECK(lead2.terms ==
          std::map<std::vector<int>, Rat>{{{1, 2}, Rat(1)}, {{0, 3}, Rat(-1)}}); // XT^2 - T^3

    CHECK_THROWS_AS(leading_form({Polynomial::zero(1)}), ZeroPolynomial);
}

TEST_CASE("shear substitution") {
    Polynomial x = Polynomial::variable(1, 1);
    Polynomial sx = shear(x, {Rat(5)});
    CHECK(sx.terms ==
          std::map<std::vector<int>, Rat>{{{1, 0}, Rat(1)}, {{0, 1}, Rat(5)}}); // X + 5T

    Polynomial g = poly1({{{1, 1}, Rat(1)}, {{0, 0}, Rat(-1)}}); // XT - 1
    Polynomial sg = shear(g, {Rat(3)});
    CHECK(sg.terms == std::map<std::vector<int>, Rat>{
                          {{1, 1}, Rat(1)}, {{0, 2}, Rat(3)}, {{0, 0}, Rat(-1)}});
}

TEST_CASE("shear round-trip on random polynomials") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 1 + static_cast<int>(rng.below(2));
        Polynomial f = Polynomial::zero(m);
        int terms = 1 + static_cast<int>(rng.below(4));
        for (int t = 0; t < terms; ++t) {
            std::vector<int> e(m + 1);
            for (int k = 0; k <= m; ++k) e[k] = static_cast<int>(rng.below(3));
            f.add_term(e, Rat(rng.range(-5, 5), rng.range(1, 3)));
        }
        std::vector<Rat> eta(m);
        for (int k = 0; k < m; ++k) eta[k] = Rat(rng.range(-4, 4), rng.range(1, 2));
        std::vector<Rat> neg(eta);
        for (auto& v : neg) v = -v;
        CHECK(shear(shear(f, eta), neg) == f);
    }
}

TEST_CASE("find_direction examples") {
    Polynomial f = poly1({{{0, 2}, Rat(1)}, {{1, 0}, Rat(-1)}}); // T^2 - X
    auto eta = find_direction({f}, 0, 3);
    CHECK(eta == std::vector<Rat>{Rat(0)});

    Polynomial g = poly1({{{1, 1}, Rat(1)}, {{0, 0}, Rat(-1)}}); // XT - 1
    auto eta2 = find_direction({g}, 1, 3);
    CHECK(eta2 == std::vector<Rat>{Rat(3)}); // first nonzero grid point scaled by p^s

    Polynomial h = poly1({{{1, 0}, Rat(1)}, {{0, 1}, Rat(-1)}}); // X - T
    CHECK(find_direction({h}, 0, 3) == std::vector<Rat>{Rat(0)}); // p(0,1) = -1
}

TEST_CASE("certify_direction") {
    Polynomial g = poly1({{{1, 1}, Rat(1)}, {{0, 0}, Rat(-1)}}); // XT - 1
    DirectionReport ok = certify_direction({g}, {Rat(3)});
    CHECK(ok.ok);
    REQUIRE(ok.leading_T_coeff.size() == 1);
    CHECK(ok.leading_T_coeff[0] == Rat(3));

    DirectionReport bad = certify_direction({g}, {Rat(0)});
    CHECK_FALSE(bad.ok);

    Polynomial t = poly1({{{0, 1}, Rat(1)}}); // T
    CHECK(certify_direction({t}, {Rat(7)}).ok);
    CHECK(certify_direction({t}, {Rat(0)}).ok);
}

TEST_CASE("soundness: found directions always certify") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 1 + static_cast<int>(rng.below(2));
        std::vector<Polynomial> F;
        int nf = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < nf; ++i) {
            Polynomial f = Polynomial::zero(m);
            int terms = 1 + static_cast<int>(rng.below(4));
            for (int t = 0; t < terms; ++t) {
                std::vector<int> e(m + 1);
                for (int k = 0; k <= m; ++k) e[k] = static_cast<int>(rng.below(3));
                f.add_term(e, Rat(rng.range(-5, 5)));
            }
            if (f.is_zero()) f.add_term(std::vector<int>(m + 1, 0), Rat(1));
            F.push_back(f);
        }
        for (long long s : {0, 2, 5, 8}) {
            auto eta = find_direction(F, s, 3);
            for (auto& v : eta)
                if (v != 0) CHECK(valuation_rat(v, 3) >= s);
            CHECK(certify_direction(F, eta).ok);
        }
    }
}

TEST_CASE("homogeneity of the leading form") {
    SplitMix64 rng(123);
    Polynomial f = poly1({{{1, 1}, Rat(2)}, {{0, 2}, Rat(-3)}, {{1, 0}, Rat(1)}});
    Polynomial lead = leading_form({f});
    long long d = lead.total_degree();
    for (int trial = 0; trial < 40; ++trial) {
        Rat c(rng.range(-6, 6), rng.range(1, 4));
        if (c == 0) continue;
        std::vector<Rat> b{Rat(rng.range(-5, 5), rng.range(1, 3)),
                           Rat(rng.range(-5, 5), rng.range(1, 3))};
        std::vector<Rat> cb{c * b[0], c * b[1]};
        Rat lhs = lead.eval(cb);
        Rat scale(1);
        for (long long k = 0; k < d; ++k) scale *= c;
        CHECK(lhs == scale * lead.eval(b));
    }
}

TEST_CASE("grid nonvanishing bound") {
    // For random families, the failing fraction per coordinate obeys the
    // counting bound d/(d+1).
    SplitMix64 rng(2025);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> F;
        int nf = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < nf; ++i) {
            Polynomial f = Polynomial::zero(1);
            int terms = 1 + static_cast<int>(rng.below(4));
            for (int t = 0; t < terms; ++t)
                f.add_term({static_cast<int>(rng.below(3)), static_cast<int>(rng.below(2))},
                           Rat(rng.range(-4, 4)));
            if (f.is_zero()) f.add_term({1, 0}, Rat(1));
            F.push_back(f);
        }
        Polynomial lead = leading_form(F);
        long long d = std::max<long long>(lead.total_degree(), 0);
        long long fails = 0;
        for (long long a = 0; a <= d; ++a) {
            if (lead.eval({Rat(a), Rat(1)}) == 0) ++fails;
        }
        CHECK(fails <= d); // at most d roots among d+1 grid points
    }
}
