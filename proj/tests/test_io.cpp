#include "ptri/io.hpp"

#include "gen.hpp"

#include <doctest.h>

using namespace ptri;

TEST_CASE("rational and p-adic round trips") {
    Context ctx{5, 20, 1};
    CHECK(rat_from_json(Json("3/4")) == Rat(3, 4));
    CHECK(rat_from_json(Json(-7)) == Rat(-7));
    CHECK(rat_to_json(Rat(22, 8)) == Json("11/4"));
    CHECK_THROWS_AS(rat_from_json(Json("x")), malformed_input);

    PadicNumber x = padic_from_json(Json("7/50"), ctx);
    CHECK(x.valuation() == Gamma::of(-2));
    Json j = padic_to_json(x);
    PadicNumber y = padic_from_json(j, ctx);
    CHECK(x.eq(y));
    CHECK(padic_from_json(Json{{"zero", true}}, ctx).is_zero());
}

TEST_CASE("polytope schema round trip") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        DiscretePolytope A = testgen::random_polytope(rng, 3);
        Json j = polytope_to_json(A);
        DiscretePolytope B = polytope_from_json(j);
        CHECK(A.q == B.q);
        CHECK(set_equal(A, B));
        CHECK(polytope_to_json(B) == j); // canonical form is stable
    }
}

TEST_CASE("monoplex schema round trip") {
    CellularMonoplex M = testgen::three_node_monoplex(3);
    Context ctx{3, 24, 1};
    Json j = monoplex_to_json(M);
    CellularMonoplex M2 = monoplex_from_json(j, ctx);
    REQUIRE(M2.cells.size() == M.cells.size());
    for (size_t i = 0; i < M.cells.size(); ++i) CHECK(cells_equal(M.cells[i], M2.cells[i]));
    CHECK(M2.parent == M.parent);
    CHECK(monoplex_to_json(M2) == j);
}

TEST_CASE("polynomial schema") {
    Json j = Json::parse(R"({"terms":[{"exp":[1,1],"coef":"1"},{"exp":[0,0],"coef":"-1"}]})");
    Polynomial f = polynomial_from_json(j, 1);
    CHECK(f.terms.size() == 2);
    CHECK(polynomial_from_json(polynomial_to_json(f), 1) == f);
}

TEST_CASE("malformed input is rejected") {
    Context ctx{3, 24, 1};
    CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"q": 1})")), malformed_input);
    CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"q": 2, "levels": []})")),
                    malformed_input);
    CHECK_THROWS_AS(monoplex_from_json(Json::parse(R"({"U": {"M":1,"blocks":[]},
        "cells": [{"socle": [0,0]}]})"), ctx), malformed_input);
    CHECK_THROWS_AS(parse_context(Json::parse(R"({"p": 1})")), malformed_input);
}

TEST_CASE("dot emission") {
    CellularMonoplex M = testgen::three_node_monoplex(3);
    std::vector<std::set<int>> supports;
    for (auto& c : M.cells) supports.push_back(c.socle.supp());
    std::string dot = dot_of_tree(M.parent, supports);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("Supp={1}") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    std::string dot2 = dot_of_complex(M.U);
    CHECK(dot2.find("Supp={}") != std::string::npos);
}
