#pragma once

#include "ptri/cells.hpp"

namespace ptri {

/// Output of the dispatching construction: per node A the index sets H(A),
/// P(A), the strictly increasing placement sigma_A : Supp U_A -> P(A), and
/// for type-1 nodes the fresh coordinate r_A = max H(A).
struct DispatchResult {
    std::vector<std::set<long long>> H;
    std::vector<std::set<long long>> P;
    std::vector<std::map<int, long long>> sigma;
    std::vector<long long> r; // -1 for type-0 nodes
    long long q1 = 0;         // ambient dimension of the socle complex
    long long q2 = 0;         // max over all H(A)
};

/// Runs the recursive H/P construction on a validated rooted cellular
/// monoplex, re-verifying its claims as preconditions (faces of U_A are the
/// U_B below A; predecessor socles are facets or equal with a type flip) and
/// re-checking (C0)-(C5) plus strict growth of H before returning.
DispatchResult dispatch(const CellularMonoplex& M);

/// The lifted simplicial complex: one simplex S_A per cell, all in
/// D^M R^{q2}, with vS_A the renumbered socle shape plus, for type-1 nodes,
/// the extra level r_A bounded by mu^v and nu^v.
struct LiftedComplex {
    CellularMonoplex mono;
    DispatchResult d;
    std::vector<PadicSimplex> S;
    SimplicialComplex lifted; // single rooted block holding the S_A
};

/// Builds and certifies the lift: every vS_A a simplex, the family a
/// well-dispatched rooted complex, face sets exactly {S_B : B <= A}, supports
/// H(A), and the Gamma-level image law Phi(S_A) = U_A.
LiftedComplex build_lift(const CellularMonoplex& M, const DispatchResult& d);

/// Locates the node whose simplex contains y (support must equal some H(A)).
int locate(const LiftedComplex& l, const PadicPoint& y);

/// The Cartesian projection [sigma_A]: picks u with u_i = y_{sigma_A(i)}.
PadicPoint eval_Phi(const LiftedComplex& l, const PadicPoint& y, int node);

struct PhiValue {
    int node = -1;
    PadicPoint x; // socle point in K^{q1}
    PadicNumber t;
};

/// phi(y) = (Phi(y), c_A(Phi(y)) + p^{-N M'} lambda_A y_{r_A}^N).
PhiValue eval_phi(const LiftedComplex& l, const PadicPoint& y);
PhiValue eval_phi_at(const LiftedComplex& l, const PadicPoint& y, int node);

/// Inverse on the cell underlying node A: reconstructs y from (x, t) via the
/// unique N-th root z of p^{N M'} (t - c_A(x)) / lambda_A in Q_{1,M}.
PadicPoint invert_phi(const LiftedComplex& l, int node, const PadicPoint& x,
                      const PadicNumber& t);

} // namespace ptri
