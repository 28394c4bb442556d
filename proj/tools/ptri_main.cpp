// Batch front end: parse a JSON input, run the requested validator or
// constructor, write a deterministic JSON report (exit 0 valid, 1 invalid,
// 2 malformed input).
#include "ptri/io.hpp"
#include "ptri/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ptri;

namespace {

Json read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw malformed_input("cannot open input file " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw malformed_input(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw malformed_input("input root must be an object");
    return j;
}

void write_output(const Json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    out << report.dump(2) << "\n";
}

void write_dot(const std::string& dot, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    out << dot;
}

Json violations_json(const std::vector<std::string>& v) {
    Json a = Json::array();
    for (auto& s : v) a.push_back(s);
    return a;
}

std::set<int> json_to_supp(const Json& j) {
    std::set<int> J;
    for (auto& x : j) J.insert(x.get<int>());
    return J;
}

int cmd_validate_polytope(const Json& in, const std::string& out, const std::string&) {
    DiscretePolytope A = polytope_from_json(in.at("polytope"));
    PolytopeReport rep = validate_polytope(A);
    Json j;
    j["valid"] = rep.valid;
    j["violations"] = violations_json(rep.violations);
    write_output(j, out);
    return rep.valid ? 0 : 1;
}

int cmd_faces(const Json& in, const std::string& out, const std::string& dot) {
    DiscretePolytope A = polytope_from_json(in.at("polytope"));
    Json j;
    if (in.contains("J")) {
        auto J = json_to_supp(in.at("J"));
        auto F = face(A, J);
        j["supp"] = Json(J);
        if (F)
            j["face"] = polytope_to_json(*F);
        else
            j["face"] = "empty";
    } else {
        Json faces = Json::array();
        for (auto& [J, F] : all_faces(A)) {
            Json fj;
            fj["supp"] = Json(J);
            fj["polytope"] = polytope_to_json(F);
            faces.push_back(fj);
        }
        j["faces"] = faces;
    }
    write_output(j, out);
    (void)dot;
    return 0;
}

int cmd_simplex_check(const Json& in, const std::string& out, const std::string& dot) {
    DiscretePolytope A = polytope_from_json(in.at("polytope"));
    PolytopeReport vrep = validate_polytope(A);
    Json j;
    if (!vrep.valid) {
        j["valid"] = false;
        j["violations"] = violations_json(vrep.violations);
        write_output(j, out);
        return 1;
    }
    SimplexReport rep = is_simplex(A);
    j["valid"] = true;
    j["simplex"] = rep.simplex;
    Json chain = Json::array();
    for (auto& J : rep.chain) chain.push_back(Json(J));
    j["chain"] = chain;
    if (rep.incomparable) {
        j["incomparable"] = Json::array({Json(rep.incomparable->first), Json(rep.incomparable->second)});
    }
    write_output(j, out);
    if (!dot.empty()) {
        std::vector<int> parent(rep.chain.size(), -1);
        for (size_t i = 1; i < rep.chain.size() && rep.simplex; ++i)
            parent[i] = static_cast<int>(i) - 1;
        write_dot(dot_of_tree(parent, rep.chain), dot);
    }
    return rep.simplex ? 0 : 1;
}

int cmd_complex_check(const Json& in, const std::string& out, const std::string& dot) {
    Context ctx = parse_context(in.at("context"));
    SimplicialComplex c = complex_from_json(in.at("complex"), ctx);
    ComplexReport rep = validate_complex(c);
    Json j;
    j["is_complex"] = rep.is_complex;
    j["is_monoplex"] = rep.is_monoplex;
    j["is_closed"] = rep.is_closed;
    j["is_well_dispatched"] = rep.is_well_dispatched;
    j["violations"] = violations_json(rep.violations);
    write_output(j, out);
    if (!dot.empty()) write_dot(dot_of_complex(c), dot);
    return rep.is_complex ? 0 : 1;
}

int cmd_retract(const Json& in, const std::string& out, const std::string& dot, int samples,
                long long depth) {
    Context ctx = parse_context(in.at("context"));
    SimplicialComplex c = complex_from_json(in.at("complex"), ctx);
    std::set<SimplexRef> target;
    for (auto& e : in.at("target")) target.insert(SimplexRef{e[0].get<int>(), e[1].get<int>()});
    Retraction R = build_retraction(c, target);
    Json j;
    j["base"] = Json::array({R.base_ref.block, R.base_ref.index});
    Json steps = Json::array();
    for (size_t b = 0; b < R.steps.size(); ++b) {
        for (size_t i = 0; i < R.steps[b].size(); ++i) {
            const auto& st = R.steps[b][i];
            Json sj;
            sj["simplex"] = Json::array({static_cast<int>(b), static_cast<int>(i)});
            switch (st.kind) {
            case Retraction::Step::Kind::Identity: sj["action"] = "identity"; break;
            case Retraction::Step::Kind::Base: sj["action"] = "base"; break;
            case Retraction::Step::Kind::Project:
                sj["action"] = "project";
                sj["facet"] = st.facet_index;
                sj["supp"] = Json(st.facet_supp);
                break;
            }
            steps.push_back(sj);
        }
    }
    j["steps"] = steps;

    // Sampled retraction laws.
    int checked = 0, failures = 0;
    SplitMix64 rng(ctx.seed);
    for (size_t b = 0; b < c.blocks.size(); ++b) {
        for (auto& s : c.blocks[b].simplexes) {
            for (auto& xr : sample_padic(s, depth, samples, rng.next())) {
                PadicPoint x;
                for (auto& r : xr) x.push_back(PadicNumber::from_rational(ctx.p, r, ctx.prec));
                auto [ref1, y] = R.apply(static_cast<int>(b), x);
                auto [ref2, y2] = R.apply(ref1, y);
                ++checked;
                bool idem = ref1 == ref2;
                for (size_t k = 0; k < y.size() && idem; ++k)
                    if (!y[k].eq(y2[k])) idem = false;
                if (!idem || !R.target.count(ref1)) ++failures;
            }
        }
    }
    j["sampled_points"] = checked;
    j["sampled_failures"] = failures;
    write_output(j, out);
    if (!dot.empty()) write_dot(dot_of_complex(c), dot);
    return failures == 0 ? 0 : 1;
}

int cmd_dispatch(const Json& in, const std::string& out, const std::string& dot, bool lift) {
    Context ctx = parse_context(in.at("context"));
    CellularMonoplex M = monoplex_from_json(in, ctx);
    Json j;
    try {
        DispatchResult d = dispatch(M);
        j = dispatch_to_json(M, d);
        if (lift) {
            LiftedComplex L = build_lift(M, d);
            Json sims = Json::array();
            for (auto& S : L.S) sims.push_back(polytope_to_json(S.shape));
            j["simplexes"] = sims;
            Json certs = Json::array();
            for (const char* c2 : {"dispatching", "SA-simplex", "SA-complex", "well-disp-proof",
                                   "image-SA", "cart-cont"})
                certs.push_back(c2);
            j["certificates"] = certs;
            if (!dot.empty()) {
                std::vector<std::set<int>> supports;
                for (auto& S : L.S) supports.push_back(S.supp());
                write_dot(dot_of_tree(M.parent, supports), dot);
            }
        } else if (!dot.empty()) {
            std::vector<std::set<int>> supports;
            for (auto& A : M.cells) supports.push_back(A.socle.supp());
            write_dot(dot_of_tree(M.parent, supports), dot);
        }
    } catch (const PreconditionViolation& e) {
        j["error"] = Json{{"kind", "precondition"}, {"claim", e.claim}, {"message", e.what()}};
        write_output(j, out);
        return 1;
    } catch (const PostconditionViolation& e) {
        j["error"] = Json{{"kind", "postcondition"}, {"claim", e.claim}, {"message", e.what()}};
        write_output(j, out);
        return 1;
    } catch (const CertificationFailure& e) {
        j["error"] = Json{{"kind", "certification"}, {"claim", e.claim}, {"message", e.what()}};
        write_output(j, out);
        return 1;
    }
    write_output(j, out);
    return 0;
}

int cmd_good_direction(const Json& in, const std::string& out) {
    long long m = in.at("m").get<long long>();
    Context ctx = parse_context(in.at("context"));
    std::vector<Polynomial> F;
    for (auto& pj : in.at("polynomials")) F.push_back(polynomial_from_json(pj, static_cast<int>(m)));
    long long s = in.contains("s") ? in.at("s").get<long long>() : 0;
    std::vector<Rat> eta = find_direction(F, s, ctx.p);
    DirectionReport rep = certify_direction(F, eta);
    Json j;
    Json etaj = Json::array();
    for (auto& e : eta) etaj.push_back(rat_to_json(e));
    j["eta"] = etaj;
    j["certified"] = rep.ok;
    j["leading_value"] = rat_to_json(rep.leading_value);
    Json lts = Json::array();
    for (auto& c : rep.leading_T_coeff) lts.push_back(rat_to_json(c));
    j["leading_T_coeff"] = lts;
    if (!rep.ok) j["witness"] = rep.witness;
    write_output(j, out);
    return rep.ok ? 0 : 1;
}

int cmd_oracle(const Json& in, const std::string& out, int samples, long long depth) {
    Context ctx = parse_context(in.at("context"));
    Json j;
    if (in.contains("polytope")) {
        DiscretePolytope A = polytope_from_json(in.at("polytope"));
        Window w{in.contains("window") ? in.at("window").at("B").get<long long>() : 8, A.q};
        std::optional<std::set<int>> pattern;
        if (in.contains("pattern")) pattern = json_to_supp(in.at("pattern"));
        Json pts = Json::array();
        for (auto& a : enumerate_members(A, w, pattern)) pts.push_back(gamma_point_to_json(a));
        j["points"] = pts;
    } else if (in.contains("simplex")) {
        const Json& sj = in.at("simplex");
        PadicSimplex s;
        s.p = ctx.p;
        s.M = static_cast<int>(sj.at("M").get<long long>());
        s.shape = polytope_from_json(sj.at("shape"));
        s.q = s.shape.q;
        Json pts = Json::array();
        for (auto& x : sample_padic(s, depth, samples, ctx.seed)) {
            Json xp = Json::array();
            for (auto& c : x) xp.push_back(rat_to_json(c));
            pts.push_back(xp);
        }
        j["points"] = pts;
    } else {
        throw malformed_input("oracle input needs \"polytope\" or \"simplex\"");
    }
    write_output(j, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic triangulation toolkit"};
    app.require_subcommand(1);

    std::string input, output, dot;
    int samples = 20;
    long long depth = 6;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input, "input JSON file")->required();
        sub->add_option("-o,--output", output, "output JSON file (default stdout)");
        sub->add_option("--dot", dot, "write a DOT digraph of the specialization tree");
        sub->add_option("--samples", samples, "sample count for point-level checks");
        sub->add_option("--depth", depth, "valuation depth for sampling windows");
    };

    std::vector<std::string> names = {"validate-polytope", "faces",    "simplex-check",
                                      "complex-check",     "retract",  "dispatch",
                                      "triangulate-cells", "good-direction", "oracle"};
    for (auto& n : names) add_common(app.add_subcommand(n));

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().front()->get_name();

    try {
        Json in = read_input(input);
        if (cmd == "validate-polytope") return cmd_validate_polytope(in, output, dot);
        if (cmd == "faces") return cmd_faces(in, output, dot);
        if (cmd == "simplex-check") return cmd_simplex_check(in, output, dot);
        if (cmd == "complex-check") return cmd_complex_check(in, output, dot);
        if (cmd == "retract") return cmd_retract(in, output, dot, samples, depth);
        if (cmd == "dispatch") return cmd_dispatch(in, output, dot, false);
        if (cmd == "triangulate-cells") return cmd_dispatch(in, output, dot, true);
        if (cmd == "good-direction") return cmd_good_direction(in, output);
        if (cmd == "oracle") return cmd_oracle(in, output, samples, depth);
        std::cerr << "unknown command\n";
        return 2;
    } catch (const malformed_input& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
