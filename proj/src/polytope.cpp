#include "ptri/polytope.hpp"

#include <algorithm>
#include <sstream>

namespace ptri {

namespace {

Rat ceil_rat(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (q * d < n) q += 1;
    return Rat(q);
}

Rat floor_rat(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (q * d > n) q -= 1;
    return Rat(q);
}

long long to_ll(const Rat& r) {
    Int n = numerator(r);
    return n.convert_to<long long>();
}

constexpr int kEnumCapUnbounded = 64;
constexpr long kNodeBudget = 200000;

} // namespace

std::set<int> DiscretePolytope::support() const {
    std::set<int> s;
    for (int j = 1; j <= q; ++j)
        if (levels[j - 1].supported) s.insert(j);
    return s;
}

DiscretePolytope DiscretePolytope::point(int q) {
    DiscretePolytope A;
    A.q = q;
    A.levels.assign(q, Level{});
    return A;
}

std::vector<LinCon> presentation_constraints(const DiscretePolytope& A) {
    std::vector<LinCon> cons;
    for (int j = 1; j <= A.q; ++j) {
        const Level& L = A.levels[j - 1];
        if (!L.supported) continue;
        {
            // mu_j(x) - x_j <= 0
            LinCon c;
            c.coef = L.mu.coef;
            c.coef[j] -= 1;
            c.rhs = -L.mu.c0;
            cons.push_back(std::move(c));
        }
        if (!L.nu.is_inf()) {
            // x_j - nu_j(x) <= 0
            LinCon c;
            for (auto& [i, ci] : L.nu.coef) c.coef[i] = -ci;
            c.coef[j] += 1;
            c.rhs = L.nu.c0;
            cons.push_back(std::move(c));
        }
    }
    return cons;
}

Relaxation make_relaxation(const DiscretePolytope& A, const std::vector<LinCon>& extra) {
    Relaxation R;
    for (int j : A.support()) R.vars.push_back(j);
    for (size_t k = 0; k < R.vars.size(); ++k) R.var_of[R.vars[k]] = static_cast<int>(k);
    R.lp = SimplexLP(static_cast<int>(R.vars.size()));
    auto add = [&](const LinCon& c) {
        std::map<int, Rat> row;
        for (auto& [lvl, coef] : c.coef) {
            auto it = R.var_of.find(lvl);
            if (it == R.var_of.end()) throw std::logic_error("constraint references unsupported level");
            row[it->second] = coef;
        }
        R.lp.add_le(row, c.rhs);
    };
    for (auto& c : presentation_constraints(A)) add(c);
    for (auto& c : extra) add(c);
    return R;
}

// ---------------------------------------------------------------------------
// Integer feasibility (branch and bound over exact LPs)
// ---------------------------------------------------------------------------

namespace {

struct BnB {
    const std::vector<int>& vars;
    const std::vector<LinCon>& cons;
    long budget = kNodeBudget;
    bool hit_unbounded_gap = false;

    // Parallel-slab integrality: when a primitive integer direction c is
    // bounded on both sides, c.x takes integer values at lattice points, so
    // an interval [lo, hi] without integers proves emptiness.
    bool slab_infeasible() const {
        std::map<std::vector<std::pair<int, Int>>, Rat> upper;
        auto normalized = [&](const LinCon& con)
            -> std::optional<std::pair<std::vector<std::pair<int, Int>>, Rat>> {
            Int den = 1;
            for (auto& [i, ci] : con.coef) den = lcm(den, denominator(ci));
            Int g = 0;
            std::vector<std::pair<int, Int>> dir;
            for (auto& [i, ci] : con.coef) {
                Int z = numerator(ci) * (den / denominator(ci));
                if (z == 0) continue;
                dir.emplace_back(i, z);
                g = gcd(g, abs(z));
            }
            if (dir.empty()) return std::nullopt;
            for (auto& [i, z] : dir) z /= g;
            Rat rhs = con.rhs * Rat(den, g);
            return std::make_pair(std::move(dir), std::move(rhs));
        };
        for (auto& con : cons) {
            auto n = normalized(con);
            if (!n) continue;
            auto it = upper.find(n->first);
            if (it == upper.end())
                upper.emplace(n->first, n->second);
            else if (n->second < it->second)
                it->second = n->second;
        }
        for (auto& [dir, hi] : upper) {
            std::vector<std::pair<int, Int>> neg = dir;
            for (auto& [i, z] : neg) z = -z;
            auto it = upper.find(neg);
            if (it == upper.end()) continue;
            Rat lo = -it->second;
            if (ceil_rat(lo) > floor_rat(hi)) return true; // no integer in [lo, hi]
        }
        return false;
    }

    std::optional<std::vector<long long>> run() {
        if (slab_infeasible()) return std::nullopt;
        std::vector<long long> fixed;
        auto r = descend(fixed);
        if (!r && hit_unbounded_gap)
            throw DecisionBudgetExceeded(
                "integer search exhausted the enumeration cap on an unbounded variable");
        return r;
    }

    SimplexLP build(const std::vector<long long>& fixed) const {
        SimplexLP lp(static_cast<int>(vars.size()));
        std::map<int, int> var_of;
        for (size_t k = 0; k < vars.size(); ++k) var_of[vars[k]] = static_cast<int>(k);
        for (auto& c : cons) {
            std::map<int, Rat> row;
            for (auto& [lvl, coef] : c.coef) row[var_of.at(lvl)] = coef;
            lp.add_le(row, c.rhs);
        }
        for (size_t k = 0; k < fixed.size(); ++k)
            lp.add_eq({{static_cast<int>(k), Rat(1)}}, Rat(fixed[k]));
        return lp;
    }

    std::optional<std::vector<long long>> descend(std::vector<long long>& fixed) {
        if (--budget <= 0) throw DecisionBudgetExceeded("integer search node budget exhausted");
        size_t k = fixed.size();
        SimplexLP lp = build(fixed);
        if (!lp.feasible()) return std::nullopt;
        if (k == vars.size()) return fixed;

        std::map<int, Rat> obj{{static_cast<int>(k), Rat(1)}};
        LpResult lo = lp.minimize(obj);
        if (!lo.optimal()) return std::nullopt; // min of x_k >= 0 never unbounded
        LpResult hi = lp.maximize(obj);
        long long lo_i = to_ll(ceil_rat(lo.value));
        bool unbounded_hi = hi.unbounded();
        long long hi_i = unbounded_hi ? lo_i + kEnumCapUnbounded : to_ll(floor_rat(hi.value));

        if (unbounded_hi && k + 1 == vars.size()) {
            // Last variable with no upper bound: any integer >= ceil(lo) works.
            fixed.push_back(lo_i);
            auto r = descend(fixed);
            fixed.pop_back();
            if (r) return r;
            return std::nullopt;
        }
        for (long long v = lo_i; v <= hi_i; ++v) {
            fixed.push_back(v);
            auto r = descend(fixed);
            fixed.pop_back();
            if (r) return r;
        }
        if (unbounded_hi) hit_unbounded_gap = true;
        return std::nullopt;
    }
};

} // namespace

std::optional<std::vector<long long>> find_integer_point(const std::vector<int>& vars,
                                                         const std::vector<LinCon>& cons) {
    BnB b{vars, cons};
    return b.run();
}

std::optional<GammaPoint> lex_min_member(const DiscretePolytope& A) {
    std::set<int> vars_supp = A.support();
    std::vector<int> vars(vars_supp.begin(), vars_supp.end());
    auto pt = find_integer_point(vars, presentation_constraints(A));
    if (!pt) return std::nullopt;
    GammaPoint a(A.q, Gamma::infinity());
    for (size_t k = 0; k < vars.size(); ++k) a[vars[k] - 1] = Gamma::of((*pt)[k]);
    return a;
}

bool set_nonempty(const DiscretePolytope& A) { return lex_min_member(A).has_value(); }

namespace {

// Constraints of B's complement restricted to points with B's support pattern:
// one system per violated bound, with strict < encoded through the coefficient
// denominator (integer points only).
std::vector<std::vector<LinCon>> complement_pieces(const DiscretePolytope& B) {
    std::vector<std::vector<LinCon>> pieces;
    for (int j : B.support()) {
        const Level& L = B.level(j);
        {
            // x_j < mu_j(x):  x_j - mu_j(x) + 1/D <= 0
            LinCon c;
            for (auto& [i, ci] : L.mu.coef) c.coef[i] = -ci;
            c.coef[j] += 1;
            Int D = denominator_lcm(L.mu);
            c.rhs = L.mu.c0 - Rat(1, D);
            pieces.push_back({c});
        }
        if (!L.nu.is_inf()) {
            // x_j > nu_j(x):  nu_j(x) - x_j + 1/D <= 0
            LinCon c;
            c.coef = L.nu.coef;
            c.coef[j] -= 1;
            Int D = denominator_lcm(L.nu);
            c.rhs = -L.nu.c0 - Rat(1, D);
            pieces.push_back({c});
        }
    }
    return pieces;
}

} // namespace

bool set_subset(const DiscretePolytope& A, const DiscretePolytope& B) {
    if (A.q != B.q) throw std::invalid_argument("ambient dimensions differ");
    if (A.support() != B.support()) return false;
    std::set<int> vars_supp = A.support();
    std::vector<int> vars(vars_supp.begin(), vars_supp.end());
    auto base = presentation_constraints(A);
    for (auto& piece : complement_pieces(B)) {
        auto cons = base;
        cons.insert(cons.end(), piece.begin(), piece.end());
        if (find_integer_point(vars, cons)) return false;
    }
    return true;
}

bool set_equal(const DiscretePolytope& A, const DiscretePolytope& B) {
    return set_subset(A, B) && set_subset(B, A);
}

bool set_disjoint(const DiscretePolytope& A, const DiscretePolytope& B) {
    if (A.q != B.q) throw std::invalid_argument("ambient dimensions differ");
    if (A.support() != B.support()) return true;
    std::set<int> vars_supp = A.support();
    std::vector<int> vars(vars_supp.begin(), vars_supp.end());
    auto cons = presentation_constraints(A);
    auto more = presentation_constraints(B);
    cons.insert(cons.end(), more.begin(), more.end());
    return !find_integer_point(vars, cons).has_value();
}

// ---------------------------------------------------------------------------
// Extension classification
// ---------------------------------------------------------------------------

namespace {

// Solves for an affine g on the J coordinates with g(pi_J(x)) = f(x) on
// relax(A), given that the factorization test already passed. Interpolation
// over the affine hull of the graph {(pi_J(x), f(x)) : x in relax(A)}.
AffineMap interpolate_factor(const AffineMap& f, const DiscretePolytope& A,
                             const std::set<int>& J) {
    Relaxation R = make_relaxation(A);
    std::vector<int> jlist(J.begin(), J.end());
    int d = static_cast<int>(jlist.size()); // graph space dimension d+1
    LpResult base = R.lp.maximize({});
    if (!base.optimal()) throw std::logic_error("interpolate_factor: empty relaxation");
    if (base.x.empty()) base.x.assign(R.vars.size(), Rat(0));

    auto image = [&](const std::vector<Rat>& x) {
        std::vector<Rat> g(d + 1);
        for (int k = 0; k < d; ++k) {
            auto it = R.var_of.find(jlist[k]);
            g[k] = (it == R.var_of.end()) ? Rat(0) : x[it->second];
        }
        std::map<int, Rat> xm;
        for (size_t k = 0; k < R.vars.size(); ++k) xm[R.vars[k]] = x[k];
        g[d] = f.eval_rat(xm);
        return g;
    };
    auto image_dir = [&](const std::vector<Rat>& ray) {
        std::vector<Rat> g(d + 1);
        for (int k = 0; k < d; ++k) {
            auto it = R.var_of.find(jlist[k]);
            g[k] = (it == R.var_of.end()) ? Rat(0) : ray[it->second];
        }
        Rat acc(0);
        for (auto& [i, ci] : f.coef) {
            auto it = R.var_of.find(i);
            if (it != R.var_of.end()) acc += ci * ray[it->second];
        }
        g[d] = acc;
        return g;
    };

    std::vector<Rat> z0 = image(base.x);
    std::vector<std::vector<Rat>> dirs;
    std::vector<std::vector<Rat>> ortho; // orthogonalized copy of dirs

    auto ortho_residual = [&](std::vector<Rat> w) {
        for (auto& dvec : ortho) {
            Rat num(0), den(0);
            for (int k = 0; k <= d; ++k) {
                num += w[k] * dvec[k];
                den += dvec[k] * dvec[k];
            }
            if (den == 0) continue;
            Rat t = num / den;
            for (int k = 0; k <= d; ++k) w[k] -= t * dvec[k];
        }
        return w;
    };
    auto add_dir = [&](const std::vector<Rat>& dir) {
        std::vector<Rat> v = ortho_residual(dir);
        bool zero = std::all_of(v.begin(), v.end(), [](const Rat& r) { return r == 0; });
        if (zero) throw std::logic_error("interpolate_factor: dependent direction");
        ortho.push_back(std::move(v));
        dirs.push_back(dir);
    };

    for (int probe = 0; probe <= d; ++probe) {
        while (true) {
            std::vector<Rat> w(d + 1, Rat(0));
            w[probe] = 1;
            w = ortho_residual(w);
            bool zero = std::all_of(w.begin(), w.end(), [](const Rat& r) { return r == 0; });
            if (zero) break;
            // objective: w . image(x), linear in x
            std::map<int, Rat> obj;
            for (int k = 0; k < d; ++k) {
                auto it = R.var_of.find(jlist[k]);
                if (it != R.var_of.end() && w[k] != 0) obj[it->second] += w[k];
            }
            if (w[d] != 0) {
                for (auto& [i, ci] : f.coef) {
                    auto it = R.var_of.find(i);
                    if (it != R.var_of.end()) obj[it->second] += w[d] * ci;
                }
            }
            LpResult up = R.lp.maximize(obj);
            LpResult dn = R.lp.minimize(obj);
            std::vector<Rat> dir;
            if (up.unbounded()) {
                dir = image_dir(up.ray);
            } else if (dn.unbounded()) {
                dir = image_dir(dn.ray);
                for (auto& t : dir) t = -t;
            } else if (up.value != dn.value) {
                auto a = image(up.x), b = image(dn.x);
                dir.resize(d + 1);
                for (int k = 0; k <= d; ++k) dir[k] = a[k] - b[k];
            } else {
                break; // w . image constant on the hull; try next probe
            }
            add_dir(dir);
            if (static_cast<int>(dirs.size()) > d + 1)
                throw std::logic_error("interpolate_factor: dimension overflow");
        }
    }

    // Solve  sum_k c_k * dir[k] = dir[d]  for every direction (Gaussian
    // elimination, free coefficients set to 0), then fix c0 at the base point.
    int n = d;
    std::vector<std::vector<Rat>> M; // rows: [a_1..a_d | rhs]
    for (auto& dvec : dirs) {
        std::vector<Rat> row(n + 1);
        for (int k = 0; k < n; ++k) row[k] = dvec[k];
        row[n] = dvec[d];
        M.push_back(std::move(row));
    }
    std::vector<int> pivot_col;
    size_t r = 0;
    for (int c = 0; c < n && r < M.size(); ++c) {
        size_t sel = r;
        while (sel < M.size() && M[sel][c] == 0) ++sel;
        if (sel == M.size()) continue;
        std::swap(M[r], M[sel]);
        Rat pv = M[r][c];
        for (int k = c; k <= n; ++k) M[r][k] /= pv;
        for (size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rat fmul = M[i][c];
            for (int k = c; k <= n; ++k) M[i][k] -= fmul * M[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < M.size(); ++i)
        if (M[i][n] != 0)
            throw std::logic_error("interpolate_factor: inconsistent graph directions");

    std::vector<Rat> c(n, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) c[pivot_col[i]] = M[i][n];

    AffineMap g;
    for (int k = 0; k < n; ++k)
        if (c[k] != 0) g.coef[jlist[k]] = c[k];
    Rat acc = z0[d];
    for (int k = 0; k < n; ++k) acc -= c[k] * z0[k];
    g.c0 = acc;
    return g;
}

} // namespace

Extension extend_impl(const AffineMap& f, const DiscretePolytope& A, const std::set<int>& J) {
    for (int j : J)
        if (!A.has_level(j)) throw std::invalid_argument("J not a subset of support(A)");
    if (f.is_inf()) return Extension{ExtendKind::Infinite, {}};

    std::set<int> dropped;
    for (int j : A.support())
        if (!J.count(j)) dropped.insert(j);

    // Finite: f factors through pi_J on relax(A). Pair LP over (x, x').
    {
        std::set<int> vars_supp = A.support();
    std::vector<int> vars(vars_supp.begin(), vars_supp.end());
        int n = static_cast<int>(vars.size());
        SimplexLP lp(2 * n);
        std::map<int, int> var_of;
        for (int k = 0; k < n; ++k) var_of[vars[k]] = k;
        auto add_copy = [&](int offset) {
            for (auto& c : presentation_constraints(A)) {
                std::map<int, Rat> row;
                for (auto& [lvl, coef] : c.coef) row[var_of.at(lvl) + offset] = coef;
                lp.add_le(row, c.rhs);
            }
        };
        add_copy(0);
        add_copy(n);
        for (int j : J) lp.add_eq({{var_of.at(j), Rat(1)}, {var_of.at(j) + n, Rat(-1)}}, Rat(0));
        std::map<int, Rat> obj;
        for (auto& [i, ci] : f.coef) {
            obj[var_of.at(i)] += ci;
            obj[var_of.at(i) + n] -= ci;
        }
        LpResult res = lp.maximize(obj);
        if (res.infeasible()) throw std::logic_error("extend_impl: empty relaxation");
        if (res.optimal() && res.value == 0)
            return Extension{ExtendKind::Finite, interpolate_factor(f, A, J)};
    }

    // Infinite: no recession direction of relax(A) with every dropped
    // coordinate >= 1 keeps f from growing.
    {
        std::set<int> vars_supp = A.support();
    std::vector<int> vars(vars_supp.begin(), vars_supp.end());
        int n = static_cast<int>(vars.size());
        SimplexLP lp(n);
        std::map<int, int> var_of;
        for (int k = 0; k < n; ++k) var_of[vars[k]] = k;
        for (auto& c : presentation_constraints(A)) {
            std::map<int, Rat> row;
            for (auto& [lvl, coef] : c.coef) row[var_of.at(lvl)] = coef;
            lp.add_le(row, Rat(0)); // recession cone
        }
        for (int j : dropped) lp.add_ge({{var_of.at(j), Rat(1)}}, Rat(1));
        std::map<int, Rat> frow;
        for (auto& [i, ci] : f.coef) frow[var_of.at(i)] += ci;
        lp.add_le(frow, Rat(0)); // f nonincreasing along the direction
        if (!lp.feasible()) return Extension{ExtendKind::Infinite, {}};
    }
    return Extension{ExtendKind::NotExtendable, {}};
}

Extension extend_to_face(const AffineMap& f, const DiscretePolytope& A, const std::set<int>& J) {
    auto F = face(A, J);
    if (!F) throw EmptyFace("F_J(A) is empty for J=" + supp_str(J));
    return extend_impl(f, A, J);
}

std::optional<DiscretePolytope> face(const DiscretePolytope& A, const std::set<int>& J) {
    std::set<int> supp = A.support();
    for (int j : J)
        if (!supp.count(j)) throw std::invalid_argument("face: J not a subset of support(A)");
    if (supp.empty()) return A; // the point polytope; J == {}
    int top = *supp.rbegin();

    DiscretePolytope socle = A;
    socle.levels[top - 1] = Level{}; // drop the top supported level
    std::set<int> Jhat = J;
    Jhat.erase(top);

    auto Y = face(socle, Jhat);
    if (!Y) return std::nullopt;

    const Level& L = A.level(top);
    if (J.count(top)) {
        Extension emu = extend_impl(L.mu, socle, Jhat);
        if (emu.kind == ExtendKind::NotExtendable)
            throw NotLargelyContinuous("mu at level " + std::to_string(top) +
                                       " fails to extend to face " + supp_str(Jhat));
        if (emu.kind == ExtendKind::Infinite) return std::nullopt; // needs mu-bar < +inf
        AffineMap nu_bar = AffineMap::constant_inf();
        if (!L.nu.is_inf()) {
            Extension enu = extend_impl(L.nu, socle, Jhat);
            if (enu.kind == ExtendKind::NotExtendable)
                throw NotLargelyContinuous("nu at level " + std::to_string(top) +
                                           " fails to extend to face " + supp_str(Jhat));
            nu_bar = (enu.kind == ExtendKind::Finite) ? enu.g : AffineMap::constant_inf();
        }
        DiscretePolytope F = *Y;
        F.levels[top - 1] = Level{true, emu.g, nu_bar};
        return F;
    }
    // top not in J: the face exists only if nu-bar = +inf on Y.
    if (!L.nu.is_inf()) {
        Extension enu = extend_impl(L.nu, socle, Jhat);
        if (enu.kind == ExtendKind::NotExtendable)
            throw NotLargelyContinuous("nu at level " + std::to_string(top) +
                                       " fails to extend to face " + supp_str(Jhat));
        if (enu.kind == ExtendKind::Finite) return std::nullopt;
    }
    return Y;
}

bool strict_contains(const DiscretePolytope& A, const GammaPoint& a) {
    if (static_cast<int>(a.size()) != A.q) throw std::invalid_argument("dimension mismatch");
    if (support(a) != A.support()) return false;
    for (int j : A.support()) {
        const Level& L = A.level(j);
        Rat aj(a[j - 1].finite());
        Omega lo = L.mu.eval(a);
        if (lo.is_inf() || !(lo.finite() <= aj)) return false;
        Omega hi = L.nu.eval(a);
        if (!hi.is_inf() && !(aj <= hi.finite())) return false;
    }
    return true;
}

bool contains(const DiscretePolytope& A, const GammaPoint& a) {
    if (static_cast<int>(a.size()) != A.q) throw std::invalid_argument("dimension mismatch");
    std::set<int> J = support(a);
    std::set<int> supp = A.support();
    if (!std::includes(supp.begin(), supp.end(), J.begin(), J.end())) return false;
    if (J == supp) return strict_contains(A, a);
    auto F = face(A, J);
    if (!F) return false;
    return strict_contains(*F, a);
}

std::vector<std::pair<std::set<int>, DiscretePolytope>> all_faces(const DiscretePolytope& A) {
    std::set<int> supp_supp = A.support();
    std::vector<int> supp(supp_supp.begin(), supp_supp.end());
    int n = static_cast<int>(supp.size());
    std::vector<std::pair<std::set<int>, DiscretePolytope>> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::set<int> J;
        for (int k = 0; k < n; ++k)
            if (mask & (1ul << k)) J.insert(supp[k]);
        auto F = face(A, J);
        if (F) out.emplace_back(std::move(J), std::move(*F));
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

SimplexReport is_simplex(const DiscretePolytope& A) {
    SimplexReport rep;
    auto faces = all_faces(A);
    // face-of relation: F_J <= F_J' iff J subset J' and F_J(F_J') nonempty.
    auto face_of = [&](const std::set<int>& J, const DiscretePolytope& FJp) {
        return face(FJp, J).has_value();
    };
    for (size_t a = 0; a < faces.size(); ++a) {
        for (size_t b = a + 1; b < faces.size(); ++b) {
            const auto& [Ja, Fa] = faces[a];
            const auto& [Jb, Fb] = faces[b];
            bool ab = std::includes(Jb.begin(), Jb.end(), Ja.begin(), Ja.end()) && face_of(Ja, Fb);
            bool ba = std::includes(Ja.begin(), Ja.end(), Jb.begin(), Jb.end()) && face_of(Jb, Fa);
            if (!ab && !ba) {
                rep.simplex = false;
                rep.incomparable = std::make_pair(Ja, Jb);
                for (auto& [J, F] : faces) {
                    rep.chain.push_back(J);
                    rep.chain_faces.push_back(F);
                }
                return rep;
            }
        }
    }
    rep.simplex = true;
    for (auto& [J, F] : faces) {
        rep.chain.push_back(J);
        rep.chain_faces.push_back(F);
    }
    return rep;
}

PolytopeReport validate_polytope(const DiscretePolytope& A) {
    PolytopeReport rep;
    auto bad = [&](const std::string& msg) { rep.violations.push_back(msg); };

    if (static_cast<int>(A.levels.size()) != A.q) {
        bad("levels array size differs from q");
        return rep;
    }
    // Structural staircase shape.
    for (int j = 1; j <= A.q; ++j) {
        const Level& L = A.levels[j - 1];
        if (!L.supported) continue;
        if (L.mu.is_inf()) bad("mu at level " + std::to_string(j) + " is +inf");
        auto check_refs = [&](const AffineMap& f, const char* name) {
            if (f.is_inf()) return;
            for (auto& [i, ci] : f.coef) {
                if (i >= j) bad(std::string(name) + " at level " + std::to_string(j) +
                                " references level " + std::to_string(i) + " >= " + std::to_string(j));
                else if (!A.has_level(i))
                    bad(std::string(name) + " at level " + std::to_string(j) +
                        " references unsupported level " + std::to_string(i));
            }
        };
        check_refs(L.mu, "mu");
        check_refs(L.nu, "nu");
    }
    if (!rep.violations.empty()) return rep;

    // 0 <= mu_j and mu_j <= nu_j at the integer points of the socle.
    for (int j = 1; j <= A.q; ++j) {
        const Level& L = A.levels[j - 1];
        if (!L.supported) continue;
        DiscretePolytope socle = A;
        for (int k = j; k <= A.q; ++k) socle.levels[k - 1] = Level{};
        std::set<int> vars_supp = socle.support();
    std::vector<int> vars(vars_supp.begin(), vars_supp.end());
        auto base = presentation_constraints(socle);
        {
            // witness mu_j(x) < 0
            LinCon c;
            c.coef = L.mu.coef;
            Int D = denominator_lcm(L.mu);
            c.rhs = -L.mu.c0 - Rat(1, D);
            for (auto& [i, ci] : c.coef) c.coef[i] = ci; // keep as-is: mu <= -1/D
            auto cons = base;
            cons.push_back(c);
            if (auto w = find_integer_point(vars, cons))
                bad("mu at level " + std::to_string(j) + " is negative on the socle");
        }
        if (!L.nu.is_inf()) {
            // witness nu_j(x) < mu_j(x), i.e. (mu - nu)(x) >= 1/D
            AffineMap diff = L.mu - L.nu;
            LinCon c;
            for (auto& [i, ci] : diff.coef) c.coef[i] = -ci;
            Int D = denominator_lcm(diff);
            c.rhs = diff.c0 - Rat(1, D);
            auto cons = base;
            cons.push_back(c);
            if (auto w = find_integer_point(vars, cons))
                bad("nu < mu at level " + std::to_string(j) + " somewhere on the socle");
        }
    }
    if (!rep.violations.empty()) return rep;

    // Large continuity of every bound on every socle face.
    for (int j = 1; j <= A.q; ++j) {
        const Level& L = A.levels[j - 1];
        if (!L.supported) continue;
        DiscretePolytope socle = A;
        for (int k = j; k <= A.q; ++k) socle.levels[k - 1] = Level{};
        try {
            for (auto& [Jf, F] : all_faces(socle)) {
                if (extend_impl(L.mu, socle, Jf).kind == ExtendKind::NotExtendable)
                    bad("mu at level " + std::to_string(j) + " not largely continuous toward face " +
                        supp_str(Jf));
                if (!L.nu.is_inf() &&
                    extend_impl(L.nu, socle, Jf).kind == ExtendKind::NotExtendable)
                    bad("nu at level " + std::to_string(j) + " not largely continuous toward face " +
                        supp_str(Jf));
            }
        } catch (const NotLargelyContinuous& e) {
            bad(std::string("socle face computation failed: ") + e.what());
        }
    }
    if (!rep.violations.empty()) return rep;

    if (!set_nonempty(A)) bad("polytope has no integer point");

    rep.valid = rep.violations.empty();
    return rep;
}

} // namespace ptri
