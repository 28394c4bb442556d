#pragma once

#include "ptri/simplex.hpp"

namespace ptri {

/// N-monomial datum xi * prod u_i^{e_i} over the supported socle coordinates,
/// or one of the constants 0 and infinity.
struct MonomialFn {
    enum class Kind { Zero, Inf, Mono };
    Kind kind = Kind::Zero;
    PadicNumber xi;               // Mono only, nonzero
    std::map<int, long long> exp; // 1-based socle coordinate -> exponent

    static MonomialFn zero() { return {}; }
    static MonomialFn infinity() {
        MonomialFn f;
        f.kind = Kind::Inf;
        return f;
    }
    static MonomialFn monomial(PadicNumber xi_, std::map<int, long long> exp_) {
        MonomialFn f;
        f.kind = Kind::Mono;
        f.xi = std::move(xi_);
        f.exp = std::move(exp_);
        return f;
    }
    bool is_zero() const { return kind == Kind::Zero; }
    bool is_inf() const { return kind == Kind::Inf; }

    /// Value at a socle point (finite for Mono/Zero; throws on Inf).
    PadicNumber value(long long p, const PadicPoint& u) const;
    /// v(f) as an affine map on vU: v(xi) + sum e_i a_i. Zero -> +inf map.
    AffineMap valuation_map() const;

    bool eq(const MonomialFn& o) const;
};

/// Presented cell (c, nu, mu, lambda Q_{N,M'}) over a simplex socle.
struct MonomialCell {
    PadicSimplex socle; // U, of index M
    MonomialFn c;
    MonomialFn nu; // inner bound (Zero allowed)
    MonomialFn mu; // outer bound (Inf allowed)
    PadicNumber lambda;
    long long N = 1;
    long long Mp = 1; // M'
    int type = 1;     // 0 iff coset {0}

    long long p() const { return socle.p; }
};

struct CellReport {
    bool valid = false;
    std::vector<std::string> violations;
};

/// Structural and fiber invariants: typing, 0 <= v(lambda) < N, N-divisible
/// bound exponents, v(nu) >= v(mu) on vU (LP).
CellReport validate_cell(const MonomialCell& A);

/// Exact membership of (x, t): x in the socle, |nu(x)| <= |t-c(x)| <= |mu(x)|
/// and t-c(x) in lambda Q_{N,M'} (type 0: t = c(x)).
bool cell_member(const MonomialCell& A, const PadicPoint& x, const PadicNumber& t);

/// Fitting bounds via the valuation-congruence criterion.
bool is_fitting(const MonomialCell& A);

/// min v(mu) >= -M' over vU (LP).
bool check_bounded(const MonomialCell& A);

struct BoundaryResult {
    enum class Status { Cell, Empty, NotLargelyContinuous } status;
    MonomialCell cell; // when status == Cell
};

/// Boundary cell over the face of the socle with support J: extends each
/// monomial datum by the dropped-exponent rule, then forms the type-i cell.
BoundaryResult boundary_cell(const MonomialCell& A, const std::set<int>& J, int i);

/// mu^v with mu^v(a) = M' + beta0 + sum beta_i a_i, beta0 = (v(xi)-v(lambda))/N.
/// mu = 0 gives the constant +inf map. Throws NotFitting when the congruence
/// fails, std::invalid_argument for mu = infinity or type-0 cells.
AffineMap mu_v(const MonomialCell& A);
AffineMap nu_v(const MonomialCell& A);

/// Exact minimum of an affine map over relax(shape); nullopt when unbounded.
std::optional<Rat> affine_min_over(const DiscretePolytope& shape, const AffineMap& f);

bool cells_equal(const MonomialCell& A, const MonomialCell& B);

/// Rooted specialization tree of cells over a socle complex. parent[i] = -1
/// marks a root; socle_of[i] locates the cell's simplex inside U.
struct CellularMonoplex {
    SimplicialComplex U;
    std::vector<MonomialCell> cells;
    std::vector<SimplexRef> socle_of;
    std::vector<int> parent;

    std::vector<int> children(int i) const;
    std::vector<int> roots() const;
    /// Ancestors of i from the root down to i's parent.
    std::vector<int> ancestors(int i) const;
};

struct MonoplexReport {
    bool valid = false;
    bool rooted = false;
    bool closed = false;
    std::vector<std::string> violations;
};

/// Checks the tree order, the boundary-cell law B = d^{tp B}_Y(A) on every
/// comparable pair, lambda agreement for type-1 descendants, fitting of all
/// cells, and (closed flag) that every boundary cell of every cell appears.
MonoplexReport validate_monoplex(const CellularMonoplex& M);

/// Transition check for B inside A: at each sample (x,t) of B,
/// (t - c_A(x)) / (h(x)^alpha (t - c_B(x))^{1-alpha}) lies in 1 + p^n R.
bool check_transition(const MonomialCell& B, const MonomialCell& A, const MonomialFn& h,
                      int alpha, long long n,
                      const std::vector<std::pair<PadicPoint, PadicNumber>>& samples);

} // namespace ptri
