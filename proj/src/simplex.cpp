#include "ptri/simplex.hpp"

#include <algorithm>
#include <sstream>

namespace ptri {

GammaPoint valuation_vector(const PadicPoint& x) {
    GammaPoint a;
    a.reserve(x.size());
    for (auto& xi : x) a.push_back(xi.valuation());
    return a;
}

bool member(const PadicSimplex& s, const PadicPoint& x) {
    if (static_cast<int>(x.size()) != s.q) throw std::invalid_argument("dimension mismatch");
    for (auto& xi : x) {
        if (xi.prime() != s.p) throw std::invalid_argument("mixed primes");
        if (!in_subgroup(xi, SubgroupSpec::D(s.M))) return false;
    }
    return strict_contains(s.shape, valuation_vector(x));
}

FaceChain faces_of(const PadicSimplex& s) {
    SimplexReport rep = is_simplex(s.shape);
    if (!rep.simplex) throw ValidationError("faces_of: shape is not a simplex");
    FaceChain out;
    for (size_t i = 0; i < rep.chain_faces.size(); ++i) {
        PadicSimplex f;
        f.p = s.p;
        f.M = s.M;
        f.q = s.q;
        f.shape = rep.chain_faces[i];
        out.chain.push_back(std::move(f));
    }
    out.facet = static_cast<int>(out.chain.size()) - 2; // just below s itself
    return out;
}

bool specializes(const PadicSimplex& T, const PadicSimplex& S) {
    if (T.q != S.q) return false;
    std::set<int> suppT = T.supp(), suppS = S.supp();
    if (!std::includes(suppS.begin(), suppS.end(), suppT.begin(), suppT.end())) return false;
    auto F = face(S.shape, suppT);
    if (!F) return false;
    return set_subset(T.shape, *F);
}

namespace {

std::string ref_str(int b, int i) {
    return "block " + std::to_string(b) + " simplex " + std::to_string(i);
}

} // namespace

ComplexReport validate_complex(const SimplicialComplex& c) {
    ComplexReport rep;
    rep.is_complex = true;
    rep.is_monoplex = true;
    rep.is_closed = true;
    rep.is_well_dispatched = true;
    auto bad = [&](bool& flag, const std::string& msg) {
        flag = false;
        rep.violations.push_back(msg);
    };

    for (size_t b = 0; b < c.blocks.size(); ++b) {
        const Block& blk = c.blocks[b];
        int nb = static_cast<int>(b);
        std::vector<std::vector<std::pair<std::set<int>, DiscretePolytope>>> faces;
        for (size_t i = 0; i < blk.simplexes.size(); ++i) {
            const PadicSimplex& s = blk.simplexes[i];
            if (s.q != blk.q)
                bad(rep.is_complex, ref_str(nb, i) + ": ambient dimension differs from block");
            auto v = validate_polytope(s.shape);
            if (!v.valid) {
                for (auto& m : v.violations) bad(rep.is_complex, ref_str(nb, i) + ": " + m);
                return rep;
            }
            auto sr = is_simplex(s.shape);
            if (!sr.simplex) bad(rep.is_complex, ref_str(nb, i) + ": shape is not a simplex");
            faces.push_back(all_faces(s.shape));
        }
        if (!rep.is_complex) return rep;

        int n = static_cast<int>(blk.simplexes.size());
        // Pairwise disjointness and the closure condition.
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (!set_disjoint(blk.simplexes[i].shape, blk.simplexes[j].shape))
                    bad(rep.is_complex,
                        ref_str(nb, i) + " and " + ref_str(nb, j) + " are not disjoint");
                for (auto& [I, FI] : faces[i]) {
                    for (auto& [J, FJ] : faces[j]) {
                        if (I != J) continue;
                        if (set_disjoint(FI, FJ)) continue;
                        if (!set_equal(FI, FJ))
                            bad(rep.is_complex, "closures of " + ref_str(nb, i) + " and " +
                                                    ref_str(nb, j) +
                                                    " overlap without a common face at supp " +
                                                    supp_str(I));
                    }
                }
            }
        }

        // Specialization order and tree shape.
        std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) le[i][j] = specializes(blk.simplexes[i], blk.simplexes[j]);
        for (int s = 0; s < n; ++s) {
            std::vector<int> below;
            for (int t = 0; t < n; ++t)
                if (t != s && le[t][s]) below.push_back(t);
            for (size_t a = 0; a < below.size(); ++a)
                for (size_t b2 = a + 1; b2 < below.size(); ++b2) {
                    int x = below[a], y = below[b2];
                    if (!le[x][y] && !le[y][x])
                        bad(rep.is_monoplex, ref_str(nb, x) + " and " + ref_str(nb, y) +
                                                 " below " + ref_str(nb, s) +
                                                 " are incomparable");
                }
        }

        // Closedness: every proper face of a member appears in the block.
        for (int i = 0; i < n; ++i) {
            for (auto& [I, FI] : faces[i]) {
                if (I == blk.simplexes[i].supp()) continue;
                bool found = false;
                for (int j = 0; j < n && !found; ++j)
                    if (blk.simplexes[j].supp() == I && set_equal(blk.simplexes[j].shape, FI))
                        found = true;
                if (!found)
                    bad(rep.is_closed, ref_str(nb, i) + ": face with supp " + supp_str(I) +
                                           " missing from the block");
            }
        }

        // Well dispatched: over the closure of the block,
        // S' <= S iff Supp S' subset of Supp S.
        {
            std::vector<std::pair<std::set<int>, DiscretePolytope>> closure;
            for (int i = 0; i < n; ++i)
                for (auto& [I, FI] : faces[i]) {
                    bool dup = false;
                    for (auto& [J, FJ] : closure)
                        if (I == J && set_equal(FI, FJ)) dup = true;
                    if (!dup) closure.emplace_back(I, FI);
                }
            for (size_t a = 0; a < closure.size() && rep.is_well_dispatched; ++a) {
                for (size_t b2 = 0; b2 < closure.size(); ++b2) {
                    if (a == b2) continue;
                    auto& [Ia, Fa] = closure[a];
                    auto& [Ib, Fb] = closure[b2];
                    bool supp_inc = std::includes(Ib.begin(), Ib.end(), Ia.begin(), Ia.end());
                    bool spec = false;
                    if (supp_inc) {
                        auto G = face(Fb, Ia);
                        spec = G && set_subset(Fa, *G);
                    }
                    if (supp_inc != spec) {
                        bad(rep.is_well_dispatched,
                            "support inclusion and specialization disagree at supp " +
                                supp_str(Ia) + " vs " + supp_str(Ib) + " in block " +
                                std::to_string(nb));
                        break;
                    }
                }
            }
        }

        if (blk.rooted) {
            std::vector<int> minimal;
            for (int s = 0; s < n; ++s) {
                bool has_lower = false;
                for (int t = 0; t < n; ++t)
                    if (t != s && le[t][s]) has_lower = true;
                if (!has_lower) minimal.push_back(s);
            }
            if (minimal.size() != 1)
                bad(rep.is_monoplex,
                    "block " + std::to_string(nb) + " marked rooted but has " +
                        std::to_string(minimal.size()) + " minimal simplexes");
        }
    }
    return rep;
}

std::pair<SimplexRef, PadicPoint> Retraction::apply(const SimplexRef& at,
                                                    const PadicPoint& x) const {
    SimplexRef cur = at;
    PadicPoint pt = x;
    while (true) {
        const Step& st = steps[cur.block][cur.index];
        if (st.kind == Step::Kind::Identity) return {cur, pt};
        if (st.kind == Step::Kind::Base) return {base_ref, base_point};
        for (size_t i = 0; i < pt.size(); ++i)
            if (!st.facet_supp.count(static_cast<int>(i) + 1))
                pt[i] = PadicNumber::zero(pt[i].prime());
        cur = SimplexRef{cur.block, st.facet_index};
    }
}

std::pair<SimplexRef, PadicPoint> Retraction::apply(int block, const PadicPoint& x) const {
    const Block& blk = complex->blocks[block];
    for (size_t i = 0; i < blk.simplexes.size(); ++i)
        if (member(blk.simplexes[i], x)) return apply(SimplexRef{block, static_cast<int>(i)}, x);
    throw NotInComplex("point lies in no simplex of block " + std::to_string(block));
}

Retraction build_retraction(const SimplicialComplex& c, const std::set<SimplexRef>& lower) {
    ComplexReport rep = validate_complex(c);
    if (!rep.is_complex || !rep.is_closed)
        throw ValidationError("build_retraction requires a closed complex: " +
                              (rep.violations.empty() ? std::string("(flags)")
                                                      : rep.violations.front()));
    size_t total = 0;
    for (auto& b : c.blocks) total += b.simplexes.size();
    if (lower.empty()) {
        if (total != 0) throw EmptyTarget("target subcomplex is empty");
    }
    for (auto& r : lower) {
        if (r.block < 0 || r.block >= static_cast<int>(c.blocks.size()) || r.index < 0 ||
            r.index >= static_cast<int>(c.blocks[r.block].simplexes.size()))
            throw std::invalid_argument("target reference out of range");
    }
    // Lower subset: anything below a target member is a target member.
    for (size_t b = 0; b < c.blocks.size(); ++b) {
        const Block& blk = c.blocks[b];
        for (size_t i = 0; i < blk.simplexes.size(); ++i) {
            for (size_t j = 0; j < blk.simplexes.size(); ++j) {
                if (i == j) continue;
                SimplexRef ri{static_cast<int>(b), static_cast<int>(i)};
                SimplexRef rj{static_cast<int>(b), static_cast<int>(j)};
                if (lower.count(rj) && !lower.count(ri) &&
                    specializes(blk.simplexes[i], blk.simplexes[j]))
                    throw NotLowerSubset(ref_str(static_cast<int>(b), i) +
                                         " lies below a target simplex but is not in the target");
            }
        }
    }

    Retraction R;
    R.complex = &c;
    R.target = lower;

    // Base point: lexicographically minimal vertex of the minimal target
    // simplex, lifted with unit part 1.
    {
        std::vector<SimplexRef> t(lower.begin(), lower.end());
        SimplexRef best = t.front();
        for (auto& r : t) {
            const PadicSimplex& s = c.blocks[r.block].simplexes[r.index];
            const PadicSimplex& bs = c.blocks[best.block].simplexes[best.index];
            if (r.block == best.block && !(r == best)) {
                if (specializes(s, bs)) best = r;
            }
        }
        const PadicSimplex& bs = c.blocks[best.block].simplexes[best.index];
        auto vtx = lex_min_member(bs.shape);
        if (!vtx) throw std::logic_error("target simplex has no integer shape point");
        PadicPoint pt;
        for (int i = 0; i < bs.q; ++i) {
            if ((*vtx)[i].is_inf())
                pt.push_back(PadicNumber::zero(c.p));
            else
                pt.push_back(PadicNumber::from_rational(
                    c.p, Rat(pow_int(Int(c.p), static_cast<unsigned long long>((*vtx)[i].finite())))));
        }
        R.base_ref = best;
        R.base_point = pt;
    }

    for (size_t b = 0; b < c.blocks.size(); ++b) {
        const Block& blk = c.blocks[b];
        std::vector<Retraction::Step> ss(blk.simplexes.size());
        for (size_t i = 0; i < blk.simplexes.size(); ++i) {
            SimplexRef ri{static_cast<int>(b), static_cast<int>(i)};
            if (lower.count(ri)) {
                ss[i].kind = Retraction::Step::Kind::Identity;
                continue;
            }
            FaceChain fc = faces_of(blk.simplexes[i]);
            if (fc.chain.size() <= 1) {
                ss[i].kind = Retraction::Step::Kind::Base;
                continue;
            }
            const DiscretePolytope& facet_shape = fc.chain[fc.facet].shape;
            int fidx = -1;
            for (size_t j = 0; j < blk.simplexes.size(); ++j)
                if (blk.simplexes[j].supp() == facet_shape.support() &&
                    set_equal(blk.simplexes[j].shape, facet_shape))
                    fidx = static_cast<int>(j);
            if (fidx < 0) throw std::logic_error("closed complex is missing a facet");
            ss[i].kind = Retraction::Step::Kind::Project;
            ss[i].facet_index = fidx;
            ss[i].facet_supp = facet_shape.support();
        }
        R.steps.push_back(std::move(ss));
    }
    return R;
}

} // namespace ptri
