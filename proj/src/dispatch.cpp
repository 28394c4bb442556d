#include "ptri/dispatch.hpp"

#include "ptri/oracle.hpp"

#include <algorithm>

namespace ptri {

namespace {

constexpr long long kIndexBound = 1000000;

struct NodeOrder {
    std::vector<int> order; // linear extension, root first
    std::vector<int> depth;
};

NodeOrder linear_extension(const CellularMonoplex& M) {
    int n = static_cast<int>(M.cells.size());
    NodeOrder no;
    no.depth.assign(n, 0);
    for (int i = 0; i < n; ++i) no.depth[i] = static_cast<int>(M.ancestors(i).size());
    no.order.resize(n);
    for (int i = 0; i < n; ++i) no.order[i] = i;
    std::sort(no.order.begin(), no.order.end(), [&](int a, int b) {
        if (no.depth[a] != no.depth[b]) return no.depth[a] < no.depth[b];
        return a < b;
    });
    return no;
}

bool socle_equal(const CellularMonoplex& M, int a, int b) {
    return M.socle_of[a] == M.socle_of[b];
}

// U_B < U_A among the socle simplexes (strict face).
bool socle_strictly_below(const CellularMonoplex& M, int b, int a) {
    if (socle_equal(M, b, a)) return false;
    return specializes(M.cells[b].socle, M.cells[a].socle);
}

void check_preconditions(const CellularMonoplex& M) {
    auto mrep = validate_monoplex(M);
    if (!mrep.valid || !mrep.rooted)
        throw PreconditionViolation("cellular-monoplex",
                                    mrep.violations.empty() ? "not rooted"
                                                            : mrep.violations.front());
    // All socles in one block of U.
    int blk = M.socle_of.front().block;
    for (auto& r : M.socle_of)
        if (r.block != blk)
            throw PreconditionViolation("cellular-monoplex",
                                        "socles spread over several blocks");
    long long N = M.cells.front().N, Mp = M.cells.front().Mp;
    long long vN = valuation_int(Int(N), M.U.p);
    if (M.U.M <= vN || Mp != M.U.M + vN)
        throw PreconditionViolation("lift-triang-params",
                                    "need M > v(N) and M' = M + v(N); got M = " +
                                        std::to_string(M.U.M) + ", M' = " + std::to_string(Mp));
    for (auto& c : M.cells) {
        if (c.N != N || c.Mp != Mp)
            throw PreconditionViolation("cellular-monoplex", "cells use mixed group parameters");
        if (c.type == 1 && c.mu.is_inf())
            throw PreconditionViolation("lift-triang-params",
                                        "mu = infinity: the cell is not contained in R^{m+1}");
    }

    int n = static_cast<int>(M.cells.size());
    // Claim faces-UA: the faces of U_A are exactly the U_B with B <= A.
    for (int i = 0; i < n; ++i) {
        const PadicSimplex& UA = M.cells[i].socle;
        auto faces = all_faces(UA.shape);
        std::vector<int> belows = M.ancestors(i);
        belows.push_back(i);
        for (auto& [J, F] : faces) {
            bool found = false;
            for (int b : belows)
                if (M.cells[b].socle.supp() == J && set_equal(M.cells[b].socle.shape, F))
                    found = true;
            if (!found)
                throw PreconditionViolation("faces-UA", "face with supp " + supp_str(J) +
                                                            " of the socle of cell " +
                                                            std::to_string(i) +
                                                            " is the socle of no cell below it");
        }
        for (int b : belows) {
            bool is_face = false;
            for (auto& [J, F] : faces)
                if (M.cells[b].socle.supp() == J && set_equal(M.cells[b].socle.shape, F))
                    is_face = true;
            if (!is_face)
                throw PreconditionViolation("faces-UA", "socle of cell " + std::to_string(b) +
                                                            " is not a face of the socle of cell " +
                                                            std::to_string(i));
        }
    }
    // Claim face-stricte: B < A iff U_B < U_A or tp B < tp A; the predecessor
    // socle is the facet or equal (with a 0 -> 1 type flip).
    for (int i = 0; i < n; ++i) {
        for (int b : M.ancestors(i)) {
            bool cond = socle_strictly_below(M, b, i) || M.cells[b].type < M.cells[i].type;
            if (!cond)
                throw PreconditionViolation("face-stricte",
                                            "cells " + std::to_string(b) + " < " +
                                                std::to_string(i) +
                                                " with equal socle and no type increase");
            if (socle_equal(M, b, i) &&
                !(M.cells[b].type == 0 && M.cells[i].type == 1))
                throw PreconditionViolation("face-stricte",
                                            "equal socles of cells " + std::to_string(b) +
                                                " and " + std::to_string(i) +
                                                " without the 0/1 type flip");
        }
        int par = M.parent[i];
        if (par >= 0 && !socle_equal(M, par, i)) {
            FaceChain fc = faces_of(M.cells[i].socle);
            if (fc.facet < 0)
                throw PreconditionViolation("face-stricte",
                                            "cell " + std::to_string(i) +
                                                " has a closed socle but a distinct predecessor");
            const DiscretePolytope& facet = fc.chain[fc.facet].shape;
            const PadicSimplex& UB = M.cells[par].socle;
            if (UB.supp() != facet.support() || !set_equal(UB.shape, facet))
                throw PreconditionViolation("face-stricte",
                                            "socle of the predecessor of cell " +
                                                std::to_string(i) + " is not its facet");
        }
    }
}

struct Builder {
    const CellularMonoplex& M;
    DispatchResult d;
    std::vector<bool> done;

    explicit Builder(const CellularMonoplex& mono) : M(mono) {
        size_t n = M.cells.size();
        d.H.resize(n);
        d.P.resize(n);
        d.sigma.resize(n);
        d.r.assign(n, -1);
    }

    void rescale(long long k) {
        if (k == 1) return;
        for (size_t i = 0; i < done.size(); ++i) {
            if (!done[i]) continue;
            std::set<long long> H2, P2;
            for (long long v : d.H[i]) H2.insert(v * k);
            for (long long v : d.P[i]) P2.insert(v * k);
            d.H[i] = std::move(H2);
            d.P[i] = std::move(P2);
            for (auto& [i0, v] : d.sigma[i]) v *= k;
            if (d.r[i] >= 0) d.r[i] *= k;
        }
    }

    long long qprime() const {
        long long q = 0;
        for (size_t i = 0; i < done.size(); ++i)
            if (done[i] && !d.H[i].empty()) q = std::max(q, *d.H[i].rbegin());
        return q;
    }

    void root_step(int a) {
        const PadicSimplex& U = M.cells[a].socle;
        for (int i : U.supp()) {
            d.sigma[a][i] = i;
            d.P[a].insert(i);
        }
        d.H[a] = d.P[a];
        if (M.cells[a].type == 1) {
            d.r[a] = d.q1 + 1;
            d.H[a].insert(d.r[a]);
        }
        done[a] = true;
    }

    // One step of the induction for node a with parent b, with rescale factor
    // scale (the paper's k, possibly boosted for Case 4).
    bool try_step(int a, int b, long long scale) {
        rescale(scale);
        long long qp = qprime();

        const std::set<int> suppA = M.cells[a].socle.supp();
        std::vector<int> j(1, 0); // j_0 = 0
        for (int v : M.cells[b].socle.supp()) j.push_back(v);
        long long jr1 = std::max<long long>(qp, d.q1) + 1; // j_{r+1}

        auto sig_b = [&](int idx) -> long long {
            return idx == 0 ? 0 : d.sigma[b].at(j[idx]);
        };
        d.sigma[a].clear();
        d.P[a].clear();
        for (int i : suppA) {
            size_t l = 0;
            for (size_t t = 0; t < j.size(); ++t)
                if (j[t] <= i) l = t;
            long long next = (l + 1 < j.size()) ? j[l + 1] : jr1;
            if (!(j[l] <= i && i < next))
                throw PostconditionViolation("(C2)", "sigma interleaving has no slot for " +
                                                         std::to_string(i));
            d.sigma[a][i] = sig_b(static_cast<int>(l)) + (i - j[l]);
            d.P[a].insert(d.sigma[a][i]);
        }
        {
            long long prev = 0;
            for (int i : suppA) {
                if (d.sigma[a][i] <= prev && prev != 0)
                    throw PostconditionViolation("(C2)", "sigma not strictly increasing");
                prev = d.sigma[a][i];
            }
        }

        int tpA = M.cells[a].type, tpB = M.cells[b].type;
        bool same = socle_equal(M, b, a);
        long long maxP = d.P[a].empty() ? 0 : *d.P[a].rbegin();
        if (tpA == 0) {
            d.H[a] = d.P[a]; // Case 1
            d.r[a] = -1;
        } else if (tpB == 0 && same) {
            d.r[a] = qp + scale; // Case 2
            d.H[a] = d.H[b];
            d.H[a].insert(d.r[a]);
        } else if (tpB == 0) {
            d.r[a] = std::max(qp + scale, maxP + 1); // Case 3
            d.H[a] = d.P[a];
            d.H[a].insert(d.r[a]);
        } else {
            // Case 4: the fresh index is inherited from B.
            std::set<long long> diff;
            std::set_difference(d.H[b].begin(), d.H[b].end(), d.P[b].begin(), d.P[b].end(),
                                std::inserter(diff, diff.begin()));
            if (diff.size() != 1)
                throw PostconditionViolation("(C1)", "parent H \\ P is not a singleton");
            long long rb = *diff.begin();
            if (rb <= maxP) return false; // needs a larger rescale
            d.r[a] = rb;
            d.H[a] = d.P[a];
            for (long long v : d.H[b]) d.H[a].insert(v);
        }
        done[a] = true;
        return true;
    }
};

void verify_conditions(const CellularMonoplex& M, const DispatchResult& d) {
    int n = static_cast<int>(M.cells.size());
    for (int a = 0; a < n; ++a) {
        const auto& H = d.H[a];
        const auto& P = d.P[a];
        if (M.cells[a].type == 0) {
            if (H != P) throw PostconditionViolation("(C0)", "H != P at type-0 node " +
                                                                 std::to_string(a));
        } else {
            std::set<long long> diff;
            std::set_difference(H.begin(), H.end(), P.begin(), P.end(),
                                std::inserter(diff, diff.begin()));
            if (diff.size() != 1 || !std::includes(H.begin(), H.end(), P.begin(), P.end()))
                throw PostconditionViolation("(C1)", "H is not P plus one fresh index at node " +
                                                         std::to_string(a));
            long long rA = *diff.begin();
            if (rA != d.r[a])
                throw PostconditionViolation("(C1)", "recorded r_A differs at node " +
                                                         std::to_string(a));
            if (!P.empty() && rA <= *P.rbegin())
                throw PostconditionViolation("(C1)", "r_A not above max P(A) at node " +
                                                         std::to_string(a));
        }
        if (P.size() != M.cells[a].socle.supp().size())
            throw PostconditionViolation("(C2)", "Card P(A) != Card Supp U_A at node " +
                                                     std::to_string(a));
        {
            long long prev = -1;
            for (int i : M.cells[a].socle.supp()) {
                auto it = d.sigma[a].find(i);
                if (it == d.sigma[a].end() || !d.P[a].count(it->second))
                    throw PostconditionViolation("(C2)", "sigma_A is not onto P(A) at node " +
                                                             std::to_string(a));
                if (it->second <= prev)
                    throw PostconditionViolation("(C2)", "sigma_A not strictly increasing");
                prev = it->second;
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b : M.ancestors(a)) {
            std::set<long long> inter;
            std::set_intersection(d.H[b].begin(), d.H[b].end(), d.P[a].begin(), d.P[a].end(),
                                  std::inserter(inter, inter.begin()));
            if (inter != d.P[b])
                throw PostconditionViolation("(C3)", "P(B) != H(B) cap P(A) for nodes " +
                                                         std::to_string(b) + " <= " +
                                                         std::to_string(a));
            std::set<long long> img;
            for (int i : M.cells[b].socle.supp()) {
                auto it = d.sigma[a].find(i);
                if (it == d.sigma[a].end())
                    throw PostconditionViolation("(C4)", "sigma_A undefined on Supp U_B");
                img.insert(it->second);
            }
            if (img != d.P[b])
                throw PostconditionViolation("(C4)", "sigma_A(Supp U_B) != P(B) for nodes " +
                                                         std::to_string(b) + " <= " +
                                                         std::to_string(a));
            if (!std::includes(d.H[a].begin(), d.H[a].end(), d.H[b].begin(), d.H[b].end()) ||
                d.H[a] == d.H[b])
                throw PostconditionViolation("H-increasing", "H not strictly increasing on " +
                                                                 std::to_string(b) + " < " +
                                                                 std::to_string(a));
        }
    }
    for (int c = 0; c < n; ++c) {
        for (int a = 0; a < n; ++a) {
            if (c == a) continue;
            if (!std::includes(d.P[a].begin(), d.P[a].end(), d.P[c].begin(), d.P[c].end()))
                continue;
            const PadicSimplex& UC = M.cells[c].socle;
            const PadicSimplex& UA = M.cells[a].socle;
            bool le = (UC.supp() == UA.supp() && set_equal(UC.shape, UA.shape)) ||
                      specializes(UC, UA);
            if (!le)
                throw PostconditionViolation("(C5)", "P(C) inside P(A) but U_C not below U_A (" +
                                                         std::to_string(c) + ", " +
                                                         std::to_string(a) + ")");
        }
    }
}

} // namespace

DispatchResult dispatch(const CellularMonoplex& M) {
    if (M.cells.empty()) throw PreconditionViolation("cellular-monoplex", "no cells");
    check_preconditions(M);

    NodeOrder no = linear_extension(M);
    Builder B(M);
    B.done.assign(M.cells.size(), false);
    B.d.q1 = M.U.blocks[M.socle_of.front().block].q;

    for (int idx : no.order) {
        if (M.parent[idx] < 0) {
            B.root_step(idx);
            continue;
        }
        int par = M.parent[idx];
        long long k =
            static_cast<long long>(M.cells[idx].socle.supp().size() -
                                   M.cells[par].socle.supp().size()) + 1;
        bool ok = false;
        for (int boost = 0; boost < 24 && !ok; ++boost) {
            DispatchResult snapshot = B.d;
            std::vector<bool> done_snapshot = B.done;
            ok = B.try_step(idx, par, k << boost);
            if (!ok) {
                B.d = std::move(snapshot);
                B.done = std::move(done_snapshot);
            }
        }
        if (!ok)
            throw PostconditionViolation("(C1)", "rescale boost failed to place r_A at node " +
                                                     std::to_string(idx));
    }

    long long q2 = 0;
    for (auto& H : B.d.H)
        for (long long v : H) q2 = std::max(q2, v);
    B.d.q2 = q2;
    if (q2 >= kIndexBound)
        throw PostconditionViolation("index-bound",
                                     "coordinate indices exceeded 10^6 after rescaling");

    verify_conditions(M, B.d);
    return B.d;
}

// ---------------------------------------------------------------------------
// Lift
// ---------------------------------------------------------------------------

namespace {

AffineMap reindex(const AffineMap& f, const std::map<int, long long>& sigma) {
    if (f.is_inf()) return f;
    AffineMap g;
    g.c0 = f.c0;
    for (auto& [i, ci] : f.coef) g.coef[static_cast<int>(sigma.at(i))] = ci;
    return g;
}

} // namespace

LiftedComplex build_lift(const CellularMonoplex& M, const DispatchResult& d) {
    LiftedComplex L;
    L.mono = M;
    L.d = d;
    int n = static_cast<int>(M.cells.size());
    int q2 = static_cast<int>(d.q2);

    for (int a = 0; a < n; ++a) {
        const MonomialCell& A = M.cells[a];
        DiscretePolytope shape;
        shape.q = q2;
        shape.levels.assign(q2, Level{});
        for (int i : A.socle.supp()) {
            const Level& src = A.socle.shape.level(i);
            Level dst;
            dst.supported = true;
            dst.mu = reindex(src.mu, d.sigma[a]);
            dst.nu = reindex(src.nu, d.sigma[a]);
            shape.levels[static_cast<size_t>(d.sigma[a].at(i)) - 1] = std::move(dst);
        }
        if (A.type == 1) {
            Level top;
            top.supported = true;
            top.mu = reindex(mu_v(A), d.sigma[a]);
            top.nu = reindex(nu_v(A), d.sigma[a]);
            shape.levels[static_cast<size_t>(d.r[a]) - 1] = std::move(top);
        }
        PadicSimplex S;
        S.p = M.U.p;
        S.M = M.U.M;
        S.q = q2;
        S.shape = std::move(shape);

        std::set<int> suppS;
        for (long long h : d.H[a]) suppS.insert(static_cast<int>(h));
        if (S.supp() != suppS)
            throw CertificationFailure("well-disp-proof", "Supp S_A != H(A) at node " +
                                                              std::to_string(a));
        auto pr = validate_polytope(S.shape);
        if (!pr.valid)
            throw CertificationFailure("SA-simplex", "vS_A invalid at node " + std::to_string(a) +
                                                         ": " + pr.violations.front());
        if (!is_simplex(S.shape).simplex)
            throw CertificationFailure("SA-simplex", "vS_A not a simplex at node " +
                                                         std::to_string(a));
        L.S.push_back(std::move(S));
    }

    // Face law: faces of S_A are exactly the S_B with B <= A.
    for (int a = 0; a < n; ++a) {
        auto faces = all_faces(L.S[a].shape);
        std::vector<int> belows = M.ancestors(a);
        belows.push_back(a);
        if (faces.size() != belows.size())
            throw CertificationFailure("SA-simplex", "face count of S_A differs from the chain " +
                                                         std::to_string(a));
        for (auto& [J, F] : faces) {
            bool found = false;
            for (int b : belows)
                if (L.S[b].supp() == J && set_equal(L.S[b].shape, F)) found = true;
            if (!found)
                throw CertificationFailure("SA-simplex", "face of S_" + std::to_string(a) +
                                                             " with supp " + supp_str(J) +
                                                             " is no S_B below it");
        }
    }

    // The family is a rooted well-dispatched complex.
    L.lifted.p = M.U.p;
    L.lifted.M = M.U.M;
    Block blk;
    blk.q = q2;
    blk.rooted = true;
    blk.simplexes = L.S;
    L.lifted.blocks.push_back(std::move(blk));
    auto crep = validate_complex(L.lifted);
    if (!crep.is_complex || !crep.is_monoplex)
        throw CertificationFailure("SA-complex", crep.violations.empty()
                                                     ? "lifted family is not a complex"
                                                     : crep.violations.front());
    if (!crep.is_well_dispatched)
        throw CertificationFailure("well-disp-proof",
                                   "support order differs from specialization order");

    // Gamma-level image law Phi(S_A) = U_A: projecting vS_A to the P(A)
    // levels and renumbering back gives exactly vU_A (checked on a window).
    for (int a = 0; a < n; ++a) {
        const MonomialCell& A = M.cells[a];
        Window wu{4, A.socle.q};
        auto upts = enumerate_members(A.socle.shape, wu,
                                      std::optional<std::set<int>>(A.socle.supp()));
        for (auto& u : upts) {
            GammaPoint y(q2, Gamma::infinity());
            for (int i : A.socle.supp()) y[d.sigma[a].at(i) - 1] = u[i - 1];
            if (A.type == 1) {
                Omega lo = mu_v(A).eval(u);
                if (lo.is_inf() || denominator(lo.finite()) != 1)
                    throw CertificationFailure("image-SA", "mu^v not integer-valued on vU_A");
                y[static_cast<size_t>(d.r[a]) - 1] =
                    Gamma::of(numerator(lo.finite()).convert_to<long long>());
            }
            if (!strict_contains(L.S[a].shape, y))
                throw CertificationFailure("image-SA", "fiber point misses vS_A at node " +
                                                           std::to_string(a));
        }
        Window ws{4 + static_cast<long long>(A.Mp) + 2, q2};
        Int count = pow_int(Int(ws.B + 2), static_cast<unsigned long long>(q2));
        if (count <= 10000000) {
            auto spts = enumerate_members(L.S[a].shape, ws,
                                          std::optional<std::set<int>>(L.S[a].supp()));
            for (auto& y : spts) {
                GammaPoint u(A.socle.q, Gamma::infinity());
                for (int i : A.socle.supp()) u[i - 1] = y[d.sigma[a].at(i) - 1];
                if (!strict_contains(A.socle.shape, u))
                    throw CertificationFailure("image-SA", "projection leaves vU_A at node " +
                                                               std::to_string(a));
            }
        }
    }
    return L;
}

int locate(const LiftedComplex& l, const PadicPoint& y) {
    GammaPoint vy = valuation_vector(y);
    std::set<int> suppY = support(vy);
    for (size_t a = 0; a < l.S.size(); ++a) {
        if (l.S[a].supp() != suppY) continue;
        if (member(l.S[a], y)) return static_cast<int>(a);
    }
    throw NotInComplex("point lies in no S_A");
}

PadicPoint eval_Phi(const LiftedComplex& l, const PadicPoint& y, int node) {
    const MonomialCell& A = l.mono.cells[node];
    int q1 = static_cast<int>(l.d.q1);
    PadicPoint u(q1, PadicNumber::zero(l.mono.U.p));
    for (int i : A.socle.supp()) u[i - 1] = y[l.d.sigma[node].at(i) - 1];
    return u;
}

PhiValue eval_phi_at(const LiftedComplex& l, const PadicPoint& y, int node) {
    const MonomialCell& A = l.mono.cells[node];
    PhiValue out;
    out.node = node;
    out.x = eval_Phi(l, y, node);
    PadicNumber cx = A.c.value(A.p(), out.x);
    if (A.type == 0) {
        out.t = cx;
        return out;
    }
    long long NMp = A.N * A.Mp;
    PadicNumber scale = PadicNumber::from_rational(
        A.p(), Rat(Int(1), pow_int(Int(A.p()), static_cast<unsigned long long>(NMp))));
    PadicNumber z = y[static_cast<size_t>(l.d.r[node]) - 1];
    out.t = cx.add(scale.mul(A.lambda).mul(z.pow(A.N)));
    return out;
}

PhiValue eval_phi(const LiftedComplex& l, const PadicPoint& y) {
    return eval_phi_at(l, y, locate(l, y));
}

PadicPoint invert_phi(const LiftedComplex& l, int node, const PadicPoint& x,
                      const PadicNumber& t) {
    const MonomialCell& A = l.mono.cells[node];
    if (!cell_member(A, x, t)) throw NotInCell("(x,t) is not in the cell of this node");
    int q2 = static_cast<int>(l.d.q2);
    PadicPoint y(q2, PadicNumber::zero(A.p()));
    for (int i : A.socle.supp()) y[l.d.sigma[node].at(i) - 1] = x[i - 1];
    if (A.type == 1) {
        PadicNumber delta = t.sub(A.c.value(A.p(), x));
        long long NMp = A.N * A.Mp;
        PadicNumber scale = PadicNumber::from_rational(
            A.p(), Rat(pow_int(Int(A.p()), static_cast<unsigned long long>(NMp))));
        PadicNumber w = scale.mul(delta).div(A.lambda);
        PadicNumber z = nth_root(w, A.N);
        if (!in_subgroup(z, SubgroupSpec::Q(1, l.mono.U.M)) || z.val_finite() < 0)
            throw NotInCell("root does not land in Q_{1,M} n R");
        y[static_cast<size_t>(l.d.r[node]) - 1] = z;
    }
    return y;
}

} // namespace ptri
