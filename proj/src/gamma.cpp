#include "ptri/gamma.hpp"

#include <sstream>

namespace ptri {

std::set<int> support(const GammaPoint& a) {
    std::set<int> s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_inf()) s.insert(static_cast<int>(i) + 1);
    return s;
}

GammaPoint project(const GammaPoint& a, const std::set<int>& J) {
    GammaPoint b(a.size(), Gamma::infinity());
    for (int i : J) {
        if (i >= 1 && i <= static_cast<int>(a.size())) b[i - 1] = a[i - 1];
    }
    return b;
}

std::string gamma_str(const Gamma& g) {
    return g.is_inf() ? "+inf" : std::to_string(g.finite());
}

std::string point_str(const GammaPoint& a) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << gamma_str(a[i]);
    }
    os << ")";
    return os.str();
}

std::string supp_str(const std::set<int>& J) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i : J) {
        if (!first) os << ",";
        first = false;
        os << i;
    }
    os << "}";
    return os.str();
}

Omega AffineMap::eval(const GammaPoint& a) const {
    if (inf) return Omega::infinity();
    Rat acc = c0;
    for (auto& [i, ci] : coef) {
        if (i < 1 || i > static_cast<int>(a.size()))
            throw std::logic_error("AffineMap::eval: coordinate out of range");
        if (a[i - 1].is_inf())
            throw std::logic_error("AffineMap::eval: +inf coordinate referenced");
        acc += ci * Rat(a[i - 1].finite());
    }
    return Omega::of(acc);
}

Rat AffineMap::eval_rat(const std::map<int, Rat>& x) const {
    if (inf) throw std::logic_error("eval_rat on +inf map");
    Rat acc = c0;
    for (auto& [i, ci] : coef) {
        auto it = x.find(i);
        if (it == x.end()) throw std::logic_error("eval_rat: missing coordinate");
        acc += ci * it->second;
    }
    return acc;
}

AffineMap operator-(const AffineMap& f, const AffineMap& g) {
    if (f.inf || g.inf) throw std::logic_error("difference with +inf affine map");
    AffineMap h;
    h.c0 = f.c0 - g.c0;
    h.coef = f.coef;
    for (auto& [i, ci] : g.coef) {
        h.coef[i] -= ci;
        if (h.coef[i] == 0) h.coef.erase(i);
    }
    return h;
}

Int denominator_lcm(const AffineMap& f) {
    if (f.inf) return 1;
    Int d = denominator(f.c0);
    for (auto& [i, ci] : f.coef) d = lcm(d, denominator(ci));
    return d;
}

} // namespace ptri
