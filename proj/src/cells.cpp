#include "ptri/cells.hpp"

#include <algorithm>

namespace ptri {

PadicNumber MonomialFn::value(long long p, const PadicPoint& u) const {
    if (kind == Kind::Inf) throw std::logic_error("value of the constant infinity");
    if (kind == Kind::Zero) return PadicNumber::zero(p);
    PadicNumber acc = xi;
    for (auto& [i, e] : exp) {
        if (i < 1 || i > static_cast<int>(u.size()))
            throw std::invalid_argument("monomial references a missing coordinate");
        acc = acc.mul(u[i - 1].pow(e));
    }
    return acc;
}

AffineMap MonomialFn::valuation_map() const {
    if (kind == Kind::Zero) return AffineMap::constant_inf();
    if (kind == Kind::Inf) throw std::logic_error("valuation map of the constant infinity");
    AffineMap f;
    f.c0 = Rat(xi.val_finite());
    for (auto& [i, e] : exp)
        if (e != 0) f.coef[i] = Rat(e);
    return f;
}

bool MonomialFn::eq(const MonomialFn& o) const {
    if (kind != o.kind) return false;
    if (kind != Kind::Mono) return true;
    std::map<int, long long> a = exp, b = o.exp;
    std::erase_if(a, [](auto& kv) { return kv.second == 0; });
    std::erase_if(b, [](auto& kv) { return kv.second == 0; });
    return a == b && xi.eq(o.xi);
}

std::optional<Rat> affine_min_over(const DiscretePolytope& shape, const AffineMap& f) {
    Relaxation R = make_relaxation(shape);
    std::map<int, Rat> obj;
    for (auto& [i, ci] : f.coef) obj[R.var_of.at(i)] = ci;
    LpResult res = R.lp.minimize(obj);
    if (res.infeasible()) throw std::logic_error("affine_min_over: empty relaxation");
    if (res.unbounded()) return std::nullopt;
    return res.value + f.c0;
}

CellReport validate_cell(const MonomialCell& A) {
    CellReport rep;
    auto bad = [&](const std::string& m) { rep.violations.push_back(m); };

    if (A.N < 1 || A.Mp < 1) bad("group parameters need N, M' >= 1");
    if (A.type == 0) {
        if (!A.lambda.is_zero()) bad("type-0 cell with nonzero lambda");
        if (!A.nu.is_zero() || !A.mu.is_zero()) bad("type-0 cell must have nu = mu = 0");
    } else {
        if (A.lambda.is_zero()) bad("type-1 cell with zero lambda");
        else {
            long long vl = A.lambda.val_finite();
            if (vl < 0 || vl >= A.N) bad("lambda must satisfy 0 <= v(lambda) < N");
        }
        if (A.mu.is_zero()) bad("type-1 cell with mu = 0 has empty fibers");
        if (A.nu.is_inf()) bad("nu = infinity is not a bound");
    }
    if (A.c.is_inf()) bad("center must be finite");
    auto check_exp = [&](const MonomialFn& f, const char* name, bool needN) {
        if (f.kind != MonomialFn::Kind::Mono) return;
        auto supp = A.socle.supp();
        for (auto& [i, e] : f.exp) {
            if (!supp.count(i) && e != 0)
                bad(std::string(name) + " exponent on coordinate " + std::to_string(i) +
                    " outside the socle support");
            if (needN && e % A.N != 0)
                bad(std::string(name) + " exponent " + std::to_string(e) +
                    " not a multiple of N");
        }
        if (f.xi.is_zero()) bad(std::string(name) + " monomial with zero coefficient");
    };
    check_exp(A.c, "center", false);
    check_exp(A.nu, "nu", true);
    check_exp(A.mu, "mu", true);
    if (!rep.violations.empty()) return rep;

    // Nonempty fibers: v(nu) >= v(mu) pointwise on vU, decided by LP.
    if (A.type == 1 && !A.nu.is_zero() && !A.mu.is_inf()) {
        AffineMap diff = A.nu.valuation_map() - A.mu.valuation_map();
        auto mn = affine_min_over(A.socle.shape, diff);
        if (!mn || *mn < 0) bad("v(nu) < v(mu) somewhere on vU: empty fibers");
    }
    rep.valid = rep.violations.empty();
    return rep;
}

bool cell_member(const MonomialCell& A, const PadicPoint& x, const PadicNumber& t) {
    if (!member(A.socle, x)) return false;
    PadicNumber cx = A.c.value(A.p(), x);
    PadicNumber delta = t.sub(cx);
    if (A.type == 0) return delta.is_zero();
    if (delta.is_zero()) return false; // 0 not in lambda Q^x unless nu = 0... 0 never in coset of type 1
    // |nu(x)| <= |delta| <= |mu(x)|
    if (!A.nu.is_zero()) {
        PadicNumber nx = A.nu.value(A.p(), x);
        if (norm_compare(delta, nx) < 0) return false;
    }
    if (!A.mu.is_inf()) {
        PadicNumber mx = A.mu.value(A.p(), x);
        if (norm_compare(delta, mx) > 0) return false;
    }
    return in_subgroup(delta.div(A.lambda), SubgroupSpec::Q(A.N, A.Mp));
}

bool is_fitting(const MonomialCell& A) {
    if (A.type == 0) return true;
    long long vl = A.lambda.val_finite();
    auto side = [&](const MonomialFn& f, bool inf_ok, bool zero_ok) {
        if (f.is_inf()) return inf_ok;
        if (f.is_zero()) return zero_ok;
        for (auto& [i, e] : f.exp)
            if (e % A.N != 0) return false;
        long long vx = f.xi.val_finite();
        return ((vx - vl) % A.N + A.N) % A.N == 0;
    };
    return side(A.mu, true, false) && side(A.nu, false, true);
}

bool check_bounded(const MonomialCell& A) {
    if (A.mu.is_inf() || A.mu.is_zero()) return true;
    auto mn = affine_min_over(A.socle.shape, A.mu.valuation_map());
    if (!mn) return false;
    return *mn >= Rat(-A.Mp);
}

namespace {

// Dropped-exponent extension of a monomial datum to the face with support J.
// D = supp(socle) \ J. Negative exponent on D: no continuous extension.
// All zero on D: restriction. Some positive: the extension is identically 0.
struct ExtendedMono {
    bool not_lc = false;
    MonomialFn f;
};

ExtendedMono extend_monomial(const MonomialFn& f, const std::set<int>& socle_supp,
                             const std::set<int>& J) {
    ExtendedMono out;
    if (f.kind != MonomialFn::Kind::Mono) {
        out.f = f;
        return out;
    }
    bool has_neg = false, has_pos = false;
    for (int i : socle_supp) {
        if (J.count(i)) continue;
        auto it = f.exp.find(i);
        long long e = (it == f.exp.end()) ? 0 : it->second;
        if (e < 0) has_neg = true;
        if (e > 0) has_pos = true;
    }
    if (has_neg) {
        out.not_lc = true;
        return out;
    }
    if (has_pos) {
        out.f = MonomialFn::zero();
        return out;
    }
    MonomialFn g = f;
    for (auto it = g.exp.begin(); it != g.exp.end();)
        it = J.count(it->first) ? ++it : g.exp.erase(it);
    out.f = g;
    return out;
}

} // namespace

BoundaryResult boundary_cell(const MonomialCell& A, const std::set<int>& J, int i) {
    if (i != 0 && i != 1) throw std::invalid_argument("boundary type must be 0 or 1");
    auto F = face(A.socle.shape, J);
    if (!F) throw EmptyFace("socle has no face with supp " + supp_str(J));
    std::set<int> supp = A.socle.supp();

    ExtendedMono cb = extend_monomial(A.c, supp, J);
    ExtendedMono nb = extend_monomial(A.nu, supp, J);
    ExtendedMono mb = extend_monomial(A.mu, supp, J);
    if (cb.not_lc || nb.not_lc || mb.not_lc)
        return BoundaryResult{BoundaryResult::Status::NotLargelyContinuous, {}};

    PadicSimplex faceS;
    faceS.p = A.socle.p;
    faceS.M = A.socle.M;
    faceS.q = A.socle.q;
    faceS.shape = *F;

    if (i == 0) {
        if (!nb.f.is_zero()) return BoundaryResult{BoundaryResult::Status::Empty, {}};
        MonomialCell B;
        B.socle = faceS;
        B.c = cb.f;
        B.nu = MonomialFn::zero();
        B.mu = MonomialFn::zero();
        B.lambda = PadicNumber::zero(A.p());
        B.N = A.N;
        B.Mp = A.Mp;
        B.type = 0;
        return BoundaryResult{BoundaryResult::Status::Cell, std::move(B)};
    }
    if (mb.f.is_zero()) return BoundaryResult{BoundaryResult::Status::Empty, {}};
    MonomialCell B;
    B.socle = faceS;
    B.c = cb.f;
    B.nu = nb.f;
    B.mu = mb.f;
    B.lambda = A.lambda;
    B.N = A.N;
    B.Mp = A.Mp;
    B.type = 1;
    return BoundaryResult{BoundaryResult::Status::Cell, std::move(B)};
}

namespace {

AffineMap bound_v(const MonomialCell& A, const MonomialFn& f, const char* name) {
    if (A.type != 1) throw std::invalid_argument("valuation lift needs a type-1 cell");
    if (f.is_zero()) return AffineMap::constant_inf();
    if (f.is_inf())
        throw std::invalid_argument(std::string(name) + " = infinity has no valuation lift");
    long long vl = A.lambda.val_finite();
    long long vx = f.xi.val_finite();
    if (((vx - vl) % A.N + A.N) % A.N != 0)
        throw NotFitting(std::string(name) + ": v(xi) not congruent to v(lambda) mod N");
    AffineMap g;
    g.c0 = Rat(A.Mp + (vx - vl) / A.N);
    for (auto& [i, e] : f.exp) {
        if (e == 0) continue;
        if (e % A.N != 0) throw NotFitting(std::string(name) + ": exponent not divisible by N");
        g.coef[i] = Rat(e / A.N);
    }
    return g;
}

} // namespace

AffineMap mu_v(const MonomialCell& A) { return bound_v(A, A.mu, "mu"); }
AffineMap nu_v(const MonomialCell& A) { return bound_v(A, A.nu, "nu"); }

bool cells_equal(const MonomialCell& A, const MonomialCell& B) {
    return A.type == B.type && A.N == B.N && A.Mp == B.Mp && A.socle.q == B.socle.q &&
           A.socle.M == B.socle.M && A.socle.supp() == B.socle.supp() &&
           set_equal(A.socle.shape, B.socle.shape) && A.c.eq(B.c) && A.nu.eq(B.nu) &&
           A.mu.eq(B.mu) && A.lambda.eq(B.lambda);
}

std::vector<int> CellularMonoplex::children(int i) const {
    std::vector<int> out;
    for (size_t k = 0; k < parent.size(); ++k)
        if (parent[k] == i) out.push_back(static_cast<int>(k));
    return out;
}

std::vector<int> CellularMonoplex::roots() const {
    std::vector<int> out;
    for (size_t k = 0; k < parent.size(); ++k)
        if (parent[k] < 0) out.push_back(static_cast<int>(k));
    return out;
}

std::vector<int> CellularMonoplex::ancestors(int i) const {
    std::vector<int> chain;
    for (int a = parent[i]; a >= 0; a = parent[a]) chain.push_back(a);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

MonoplexReport validate_monoplex(const CellularMonoplex& M) {
    MonoplexReport rep;
    rep.closed = true;
    auto bad = [&](const std::string& m) { rep.violations.push_back(m); };

    size_t n = M.cells.size();
    if (M.parent.size() != n || M.socle_of.size() != n) {
        bad("tree/socle arrays do not match the cell list");
        return rep;
    }
    // Forest structure and rootedness.
    for (size_t i = 0; i < n; ++i) {
        int steps = 0, a = static_cast<int>(i);
        while (M.parent[a] >= 0) {
            a = M.parent[a];
            if (++steps > static_cast<int>(n)) {
                bad("parent pointers contain a cycle");
                return rep;
            }
        }
    }
    rep.rooted = (M.roots().size() == 1) && n > 0;
    if (!rep.rooted) bad("not rooted: " + std::to_string(M.roots().size()) + " roots");

    auto urep = validate_complex(M.U);
    if (!urep.is_complex) bad("socle complex invalid: " + urep.violations.front());

    for (size_t i = 0; i < n; ++i) {
        const MonomialCell& A = M.cells[i];
        auto ref = M.socle_of[i];
        if (ref.block < 0 || ref.block >= static_cast<int>(M.U.blocks.size()) || ref.index < 0 ||
            ref.index >= static_cast<int>(M.U.blocks[ref.block].simplexes.size())) {
            bad("cell " + std::to_string(i) + ": socle reference out of range");
            continue;
        }
        const PadicSimplex& U = M.U.blocks[ref.block].simplexes[ref.index];
        if (U.supp() != A.socle.supp() || !set_equal(U.shape, A.socle.shape))
            bad("cell " + std::to_string(i) + ": socle differs from the referenced simplex");
        auto crep = validate_cell(A);
        for (auto& v : crep.violations) bad("cell " + std::to_string(i) + ": " + v);
        if (!is_fitting(A)) bad("cell " + std::to_string(i) + " is not fitting");
    }
    if (!rep.violations.empty()) return rep;

    // Boundary law on every comparable pair (ancestor above descendant).
    for (size_t i = 0; i < n; ++i) {
        const MonomialCell& B = M.cells[i];
        for (int a : M.ancestors(static_cast<int>(i))) {
            // a is below i in the tree: i's cell is the larger one.
            const MonomialCell& low = M.cells[a];
            const MonomialCell& high = B;
            auto br = boundary_cell(high, low.socle.supp(), low.type);
            if (br.status != BoundaryResult::Status::Cell) {
                bad("cell " + std::to_string(a) + " is not the type-" + std::to_string(low.type) +
                    " boundary of cell " + std::to_string(i) + " (boundary empty or not l.c.)");
                continue;
            }
            if (!cells_equal(br.cell, low))
                bad("boundary law fails: cell " + std::to_string(a) + " != d^" +
                    std::to_string(low.type) + " of cell " + std::to_string(i));
            if (low.type == 1 && high.type == 1 && !low.lambda.eq(high.lambda))
                bad("coset mismatch between cells " + std::to_string(a) + " and " +
                    std::to_string(i));
        }
    }

    // Closedness: every nonempty boundary cell of every cell appears.
    for (size_t i = 0; i < n; ++i) {
        const MonomialCell& A = M.cells[i];
        for (auto& [J, F] : all_faces(A.socle.shape)) {
            for (int t = 0; t <= 1; ++t) {
                auto br = boundary_cell(A, J, t);
                if (br.status != BoundaryResult::Status::Cell) continue;
                if (J == A.socle.supp() && t == A.type) continue; // A itself
                bool found = false;
                for (size_t j = 0; j < n && !found; ++j)
                    if (cells_equal(M.cells[j], br.cell)) found = true;
                if (!found) {
                    rep.closed = false;
                    bad("missing boundary cell d^" + std::to_string(t) + " of cell " +
                        std::to_string(i) + " over supp " + supp_str(J));
                }
            }
        }
    }

    rep.valid = rep.violations.empty();
    return rep;
}

bool check_transition(const MonomialCell& B, const MonomialCell& A, const MonomialFn& h,
                      int alpha, long long n,
                      const std::vector<std::pair<PadicPoint, PadicNumber>>& samples) {
    if (alpha != 0 && alpha != 1) throw std::invalid_argument("alpha must be 0 or 1");
    for (auto& [x, t] : samples) {
        PadicNumber num = t.sub(A.c.value(A.p(), x));
        PadicNumber den = PadicNumber::from_rational(A.p(), Rat(1));
        if (alpha == 1) {
            den = h.value(A.p(), x);
        } else {
            den = t.sub(B.c.value(B.p(), x));
        }
        if (den.is_zero()) throw DivisionByZeroAtSample("transition denominator vanishes");
        if (num.is_zero()) return false;
        PadicNumber ratio = num.div(den);
        if (!ratio.valuation().is_inf() && ratio.val_finite() != 0) return false;
        if (static_cast<long long>(ratio.precision()) < n && !ratio.has_exact())
            throw InsufficientPrecision("transition check needs " + std::to_string(n) + " digits");
        if (ratio.unit_mod(static_cast<int>(n)) != 1) return false;
    }
    return true;
}

} // namespace ptri
