#include "ptri/io.hpp"

#include <sstream>

namespace ptri {

namespace {

[[noreturn]] void fail(const std::string& what) { throw malformed_input(what); }

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

long long need_int(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer()) fail(std::string("key \"") + key + "\" must be an integer");
    return v.get<long long>();
}

} // namespace

Context parse_context(const Json& j) {
    Context ctx;
    if (!j.is_object()) fail("context must be an object");
    ctx.p = need_int(j, "p");
    if (ctx.p < 2) fail("context.p must be a prime >= 2");
    if (j.contains("prec")) ctx.prec = static_cast<int>(j.at("prec").get<long long>());
    if (ctx.prec < 1) fail("context.prec must be >= 1");
    if (j.contains("seed")) ctx.seed = j.at("seed").get<uint64_t>();
    return ctx;
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    fail("rational must be an integer or a string \"a/b\"");
}

Json rat_to_json(const Rat& r) { return rat_str(r); }

PadicNumber padic_from_json(const Json& j, const Context& ctx) {
    if (j.is_object() && j.contains("zero") && j.at("zero").get<bool>())
        return PadicNumber::zero(ctx.p);
    if (j.is_string() || j.is_number_integer())
        return PadicNumber::from_rational(ctx.p, rat_from_json(j), ctx.prec);
    if (j.is_object() && j.contains("v") && j.contains("unit")) {
        long long v = need_int(j, "v");
        Int unit(need(j, "unit").get<std::string>());
        int prec = j.contains("prec") ? static_cast<int>(j.at("prec").get<long long>()) : ctx.prec;
        return PadicNumber::from_parts(ctx.p, v, unit, prec);
    }
    fail("p-adic number must be {\"zero\":true}, a rational, or {\"v\",\"unit\",\"prec\"}");
}

Json padic_to_json(const PadicNumber& x) {
    if (x.is_zero()) return Json{{"zero", true}};
    Json j;
    j["v"] = x.val_finite();
    j["unit"] = int_str(x.unit());
    j["prec"] = x.precision();
    return j;
}

AffineMap affine_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "+inf") return AffineMap::constant_inf();
    AffineMap f;
    f.c0 = rat_from_json(need(j, "const"));
    if (j.contains("coeffs")) {
        for (auto& [k, v] : j.at("coeffs").items()) {
            int i = std::stoi(k);
            Rat c = rat_from_json(v);
            if (c != 0) f.coef[i] = c;
        }
    }
    return f;
}

Json affine_to_json(const AffineMap& f) {
    if (f.is_inf()) return "+inf";
    Json j;
    j["const"] = rat_to_json(f.c0);
    Json coeffs = Json::object();
    for (auto& [i, c] : f.coef) coeffs[std::to_string(i)] = rat_to_json(c);
    j["coeffs"] = coeffs;
    return j;
}

DiscretePolytope polytope_from_json(const Json& j) {
    DiscretePolytope A;
    A.q = static_cast<int>(need_int(j, "q"));
    if (A.q < 0) fail("polytope.q must be >= 0");
    const Json& levels = need(j, "levels");
    if (!levels.is_array() || static_cast<int>(levels.size()) != A.q)
        fail("polytope.levels must be an array of length q");
    for (auto& lj : levels) {
        Level L;
        L.supported = need(lj, "support").get<bool>();
        if (L.supported) {
            L.mu = affine_from_json(need(lj, "mu"));
            L.nu = affine_from_json(need(lj, "nu"));
            if (L.mu.is_inf()) fail("mu must be finite");
        }
        A.levels.push_back(std::move(L));
    }
    return A;
}

Json polytope_to_json(const DiscretePolytope& A) {
    Json j;
    j["q"] = A.q;
    Json levels = Json::array();
    for (auto& L : A.levels) {
        Json lj;
        lj["support"] = L.supported;
        if (L.supported) {
            lj["mu"] = affine_to_json(L.mu);
            lj["nu"] = affine_to_json(L.nu);
        }
        levels.push_back(lj);
    }
    j["levels"] = levels;
    return j;
}

SimplicialComplex complex_from_json(const Json& j, const Context& ctx) {
    SimplicialComplex c;
    c.p = ctx.p;
    c.M = static_cast<int>(need_int(j, "M"));
    for (auto& bj : need(j, "blocks")) {
        Block b;
        b.q = static_cast<int>(need_int(bj, "q"));
        b.rooted = bj.contains("rooted") && bj.at("rooted").get<bool>();
        for (auto& sj : need(bj, "simplexes")) {
            PadicSimplex s;
            s.p = ctx.p;
            s.M = c.M;
            s.q = b.q;
            s.shape = polytope_from_json(sj);
            if (s.shape.q != b.q) fail("simplex dimension differs from block dimension");
            b.simplexes.push_back(std::move(s));
        }
        c.blocks.push_back(std::move(b));
    }
    return c;
}

Json complex_to_json(const SimplicialComplex& c) {
    Json j;
    j["M"] = c.M;
    Json blocks = Json::array();
    for (auto& b : c.blocks) {
        Json bj;
        bj["q"] = b.q;
        Json sims = Json::array();
        for (auto& s : b.simplexes) sims.push_back(polytope_to_json(s.shape));
        bj["simplexes"] = sims;
        bj["rooted"] = b.rooted;
        blocks.push_back(bj);
    }
    j["blocks"] = blocks;
    return j;
}

MonomialFn monomial_from_json(const Json& j, const Context& ctx) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "0") return MonomialFn::zero();
        if (s == "inf") return MonomialFn::infinity();
        fail("monomial string must be \"0\" or \"inf\"");
    }
    MonomialFn f;
    f.kind = MonomialFn::Kind::Mono;
    f.xi = padic_from_json(need(j, "xi"), ctx);
    if (f.xi.is_zero()) return MonomialFn::zero();
    if (j.contains("exp")) {
        for (auto& [k, v] : j.at("exp").items()) {
            long long e = v.get<long long>();
            if (e != 0) f.exp[std::stoi(k)] = e;
        }
    }
    return f;
}

Json monomial_to_json(const MonomialFn& f) {
    if (f.is_zero()) return "0";
    if (f.is_inf()) return "inf";
    Json j;
    j["xi"] = padic_to_json(f.xi);
    Json e = Json::object();
    for (auto& [i, v] : f.exp)
        if (v != 0) e[std::to_string(i)] = v;
    j["exp"] = e;
    return j;
}

CellularMonoplex monoplex_from_json(const Json& j, const Context& ctx) {
    CellularMonoplex M;
    M.U = complex_from_json(need(j, "U"), ctx);
    for (auto& cj : need(j, "cells")) {
        MonomialCell A;
        const Json& ref = need(cj, "socle");
        if (!ref.is_array() || ref.size() != 2) fail("cell.socle must be [block, index]");
        SimplexRef r{ref[0].get<int>(), ref[1].get<int>()};
        if (r.block < 0 || r.block >= static_cast<int>(M.U.blocks.size()) || r.index < 0 ||
            r.index >= static_cast<int>(M.U.blocks[r.block].simplexes.size()))
            fail("cell.socle out of range");
        A.socle = M.U.blocks[r.block].simplexes[r.index];
        A.c = monomial_from_json(need(cj, "c"), ctx);
        A.nu = monomial_from_json(need(cj, "nu"), ctx);
        A.mu = monomial_from_json(need(cj, "mu"), ctx);
        A.lambda = padic_from_json(need(cj, "lambda"), ctx);
        A.N = need_int(cj, "N");
        A.Mp = need_int(cj, "Mp");
        A.type = static_cast<int>(need_int(cj, "type"));
        M.cells.push_back(std::move(A));
        M.socle_of.push_back(r);
    }
    M.parent.assign(M.cells.size(), -1);
    if (j.contains("tree")) {
        for (auto& e : j.at("tree")) {
            if (!e.is_array() || e.size() != 2) fail("tree edges must be [parent, child]");
            int par = e[0].get<int>(), ch = e[1].get<int>();
            if (par < 0 || ch < 0 || par >= static_cast<int>(M.cells.size()) ||
                ch >= static_cast<int>(M.cells.size()) || par == ch)
                fail("tree edge out of range");
            if (M.parent[ch] != -1) fail("node " + std::to_string(ch) + " has two parents");
            M.parent[ch] = par;
        }
    }
    return M;
}

Json monoplex_to_json(const CellularMonoplex& M) {
    Json j;
    j["U"] = complex_to_json(M.U);
    Json cells = Json::array();
    for (size_t i = 0; i < M.cells.size(); ++i) {
        const MonomialCell& A = M.cells[i];
        Json cj;
        cj["socle"] = Json::array({M.socle_of[i].block, M.socle_of[i].index});
        cj["c"] = monomial_to_json(A.c);
        cj["nu"] = monomial_to_json(A.nu);
        cj["mu"] = monomial_to_json(A.mu);
        cj["lambda"] = padic_to_json(A.lambda);
        cj["N"] = A.N;
        cj["Mp"] = A.Mp;
        cj["type"] = A.type;
        cells.push_back(cj);
    }
    j["cells"] = cells;
    Json tree = Json::array();
    for (size_t i = 0; i < M.parent.size(); ++i)
        if (M.parent[i] >= 0) tree.push_back(Json::array({M.parent[i], static_cast<int>(i)}));
    j["tree"] = tree;
    return j;
}

Polynomial polynomial_from_json(const Json& j, int m) {
    Polynomial f = Polynomial::zero(m);
    for (auto& tj : need(j, "terms")) {
        const Json& ej = need(tj, "exp");
        if (!ej.is_array() || static_cast<int>(ej.size()) != m + 1)
            fail("polynomial term exponent tuple must have length m+1");
        std::vector<int> e;
        for (auto& x : ej) e.push_back(x.get<int>());
        f.add_term(e, rat_from_json(need(tj, "coef")));
    }
    return f;
}

Json polynomial_to_json(const Polynomial& f) {
    Json terms = Json::array();
    for (auto& [e, c] : f.terms) {
        Json tj;
        tj["exp"] = e;
        tj["coef"] = rat_to_json(c);
        terms.push_back(tj);
    }
    return Json{{"terms", terms}};
}

Json gamma_point_to_json(const GammaPoint& a) {
    Json arr = Json::array();
    for (auto& g : a) {
        if (g.is_inf())
            arr.push_back("+inf");
        else
            arr.push_back(g.finite());
    }
    return arr;
}

Json dispatch_to_json(const CellularMonoplex& M, const DispatchResult& d) {
    Json j;
    auto set_to_json = [](const std::set<long long>& s) {
        Json a = Json::array();
        for (long long v : s) a.push_back(v);
        return a;
    };
    Json H = Json::array(), P = Json::array(), sig = Json::array(), r = Json::array();
    for (size_t i = 0; i < M.cells.size(); ++i) {
        H.push_back(set_to_json(d.H[i]));
        P.push_back(set_to_json(d.P[i]));
        Json s = Json::object();
        for (auto& [a, b] : d.sigma[i]) s[std::to_string(a)] = b;
        sig.push_back(s);
        r.push_back(d.r[i]);
    }
    j["H"] = H;
    j["P"] = P;
    j["sigma"] = sig;
    j["r"] = r;
    j["q1"] = d.q1;
    j["q2"] = d.q2;
    return j;
}

std::string dot_of_complex(const SimplicialComplex& c) {
    std::ostringstream os;
    os << "digraph specialization {\n";
    for (size_t b = 0; b < c.blocks.size(); ++b) {
        const Block& blk = c.blocks[b];
        int n = static_cast<int>(blk.simplexes.size());
        for (int i = 0; i < n; ++i)
            os << "  n" << b << "_" << i << " [label=\"Supp="
               << supp_str(blk.simplexes[i].supp()) << "\"];\n";
        std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) le[i][j] = specializes(blk.simplexes[i], blk.simplexes[j]);
        // Hasse edges: face -> simplex with nothing in between.
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (!le[i][j]) continue;
                bool direct = true;
                for (int k = 0; k < n && direct; ++k)
                    if (k != i && k != j && le[i][k] && le[k][j]) direct = false;
                if (direct) os << "  n" << b << "_" << i << " -> n" << b << "_" << j << ";\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

std::string dot_of_tree(const std::vector<int>& parent,
                        const std::vector<std::set<int>>& supports) {
    std::ostringstream os;
    os << "digraph specialization {\n";
    for (size_t i = 0; i < supports.size(); ++i)
        os << "  n" << i << " [label=\"Supp=" << supp_str(supports[i]) << "\"];\n";
    for (size_t i = 0; i < parent.size(); ++i)
        if (parent[i] >= 0) os << "  n" << parent[i] << " -> n" << i << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ptri
