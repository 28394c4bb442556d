#pragma once

#include "ptri/cells.hpp"
#include "ptri/dispatch.hpp"
#include "ptri/gooddir.hpp"

#include <nlohmann/json.hpp>

namespace ptri {

using Json = nlohmann::ordered_json;

struct Context {
    long long p = 3;
    int prec = kDefaultPrecision;
    uint64_t seed = 1;
};

Context parse_context(const Json& j);

Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& r);

PadicNumber padic_from_json(const Json& j, const Context& ctx);
Json padic_to_json(const PadicNumber& x);

AffineMap affine_from_json(const Json& j);
Json affine_to_json(const AffineMap& f);

DiscretePolytope polytope_from_json(const Json& j);
Json polytope_to_json(const DiscretePolytope& A);

SimplicialComplex complex_from_json(const Json& j, const Context& ctx);
Json complex_to_json(const SimplicialComplex& c);

MonomialFn monomial_from_json(const Json& j, const Context& ctx);
Json monomial_to_json(const MonomialFn& f);

CellularMonoplex monoplex_from_json(const Json& j, const Context& ctx);
Json monoplex_to_json(const CellularMonoplex& M);

Polynomial polynomial_from_json(const Json& j, int m);
Json polynomial_to_json(const Polynomial& f);

Json gamma_point_to_json(const GammaPoint& a);

Json dispatch_to_json(const CellularMonoplex& M, const DispatchResult& d);

/// digraph of the specialization order of each block; one edge from every
/// face to the simplexes it bounds (Hasse edges); labels "Supp={...}".
std::string dot_of_complex(const SimplicialComplex& c);
/// digraph of a monoplex tree (edges parent -> child).
std::string dot_of_tree(const std::vector<int>& parent, const std::vector<std::set<int>>& supports);

} // namespace ptri
