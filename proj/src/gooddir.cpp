#include "ptri/gooddir.hpp"

#include <numeric>

namespace ptri {

Polynomial Polynomial::constant(int m, const Rat& c) {
    Polynomial f{m, {}};
    if (c != 0) f.terms[std::vector<int>(m + 1, 0)] = c;
    return f;
}

Polynomial Polynomial::variable(int m, int i) {
    if (i < 1 || i > m + 1) throw std::invalid_argument("variable index out of range");
    Polynomial f{m, {}};
    std::vector<int> e(m + 1, 0);
    e[i - 1] = 1;
    f.terms[e] = 1;
    return f;
}

long long Polynomial::total_degree() const {
    long long d = -1;
    for (auto& [e, c] : terms) d = std::max(d, (long long)std::accumulate(e.begin(), e.end(), 0));
    return d;
}

long long Polynomial::degree_in_T() const {
    long long d = -1;
    for (auto& [e, c] : terms) d = std::max(d, (long long)e.back());
    return d;
}

void Polynomial::add_term(const std::vector<int>& e, const Rat& c) {
    if (static_cast<int>(e.size()) != m + 1)
        throw std::invalid_argument("exponent tuple has wrong length");
    auto it = terms.find(e);
    if (it == terms.end()) {
        if (c != 0) terms[e] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

Polynomial Polynomial::add(const Polynomial& o) const {
    if (m != o.m) throw std::invalid_argument("mixed variable counts");
    Polynomial r = *this;
    for (auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::mul(const Polynomial& o) const {
    if (m != o.m) throw std::invalid_argument("mixed variable counts");
    Polynomial r = zero(m);
    for (auto& [e1, c1] : terms) {
        for (auto& [e2, c2] : o.terms) {
            std::vector<int> e(m + 1);
            for (int k = 0; k <= m; ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r = zero(m);
    if (c == 0) return r;
    for (auto& [e, c0] : terms) r.terms[e] = c0 * c;
    return r;
}

Polynomial Polynomial::homogeneous_part(long long d) const {
    Polynomial r = zero(m);
    for (auto& [e, c] : terms)
        if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms[e] = c;
    return r;
}

Polynomial Polynomial::coeff_of_T(long long k) const {
    Polynomial r = zero(m);
    for (auto& [e, c] : terms) {
        if (e.back() != k) continue;
        std::vector<int> e2 = e;
        e2.back() = 0;
        r.add_term(e2, c);
    }
    return r;
}

Rat Polynomial::eval(const std::vector<Rat>& xt) const {
    if (static_cast<int>(xt.size()) != m + 1)
        throw std::invalid_argument("evaluation point has wrong length");
    Rat acc(0);
    for (auto& [e, c] : terms) {
        Rat t = c;
        for (int k = 0; k <= m; ++k)
            for (int rep = 0; rep < e[k]; ++rep) t *= xt[k];
        acc += t;
    }
    return acc;
}

Polynomial leading_form(const std::vector<Polynomial>& F) {
    if (F.empty()) throw ZeroPolynomial("empty family");
    Polynomial prod = Polynomial::constant(F.front().m, Rat(1));
    for (auto& f : F) {
        if (f.is_zero()) throw ZeroPolynomial("zero polynomial in the family");
        prod = prod.mul(f);
    }
    return prod.homogeneous_part(prod.total_degree());
}

Polynomial shear(const Polynomial& f, const std::vector<Rat>& eta) {
    if (static_cast<int>(eta.size()) != f.m) throw std::invalid_argument("eta has wrong length");
    int m = f.m;
    Polynomial r = Polynomial::zero(m);
    Polynomial T = Polynomial::variable(m, m + 1);
    for (auto& [e, c] : f.terms) {
        Polynomial term = Polynomial::constant(m, c);
        for (int k = 0; k < m; ++k) {
            if (e[k] == 0) continue;
            Polynomial lin = Polynomial::variable(m, k + 1).add(T.scaled(eta[k]));
            for (int rep = 0; rep < e[k]; ++rep) term = term.mul(lin);
        }
        if (e[m] > 0) {
            std::vector<int> te(m + 1, 0);
            te[m] = e[m];
            Polynomial tp = Polynomial::zero(m);
            tp.terms[te] = 1;
            term = term.mul(tp);
        }
        r = r.add(term);
    }
    return r;
}

std::vector<Rat> find_direction(const std::vector<Polynomial>& F, long long s, long long p) {
    Polynomial lead = leading_form(F);
    int m = lead.m;
    long long d = std::max<long long>(lead.total_degree(), 0);
    Rat ps = Rat(pow_int(Int(p), static_cast<unsigned long long>(s)));
    std::vector<long long> a(m, 0);
    while (true) {
        std::vector<Rat> xt(m + 1, Rat(0));
        for (int k = 0; k < m; ++k) xt[k] = ps * Rat(a[k]);
        xt[m] = 1;
        if (lead.eval(xt) != 0) {
            xt.pop_back();
            return xt;
        }
        int k = m - 1;
        while (k >= 0 && a[k] == d) a[k--] = 0;
        if (k < 0) throw std::logic_error("grid search exhausted: leading form vanished on grid");
        ++a[k];
    }
}

DirectionReport certify_direction(const std::vector<Polynomial>& F, const std::vector<Rat>& eta) {
    DirectionReport rep;
    Polynomial lead = leading_form(F);
    int m = lead.m;
    std::vector<Rat> xt(eta);
    xt.push_back(Rat(1));
    rep.leading_value = lead.eval(xt);
    if (rep.leading_value == 0) {
        rep.witness = "leading form vanishes at (eta, 1)";
        return rep;
    }
    for (size_t i = 0; i < F.size(); ++i) {
        const Polynomial& f = F[i];
        long long d = f.total_degree();
        Polynomial sh = shear(f, eta);
        Polynomial top = sh.coeff_of_T(d);
        Polynomial fo = f.homogeneous_part(d);
        Rat want = fo.eval(xt);
        bool constant = top.terms.size() <= 1;
        for (auto& [e, c] : top.terms)
            for (int k = 0; k < m; ++k)
                if (e[k] != 0) constant = false;
        Rat got = top.is_zero() ? Rat(0) : top.terms.begin()->second;
        if (!constant || got != want || got == 0) {
            rep.witness = "member " + std::to_string(i) +
                          ": T^deg coefficient of the shear is not the nonzero constant f^o(eta,1)";
            return rep;
        }
        rep.leading_T_coeff.push_back(got);
    }
    // Fiber sampling: shear(f,eta)(a, T) must be a nonzero polynomial in T.
    uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rat> base(m);
        for (int k = 0; k < m; ++k) {
            long long num = static_cast<long long>(next() % 41) - 20;
            long long den = 1 + static_cast<long long>(next() % 3);
            base[k] = Rat(num, den);
        }
        for (size_t i = 0; i < F.size(); ++i) {
            Polynomial sh = shear(F[i], eta);
            bool nonzero = false;
            for (long long k = 0; k <= sh.degree_in_T() && !nonzero; ++k) {
                Polynomial ck = sh.coeff_of_T(k);
                std::vector<Rat> pt(base);
                pt.push_back(Rat(0)); // T slot unused by coeff_of_T output
                if (ck.eval(pt) != 0) nonzero = true;
            }
            if (!nonzero) {
                rep.witness = "member " + std::to_string(i) + ": fiber polynomial vanishes";
                return rep;
            }
        }
    }
    rep.ok = true;
    return rep;
}

} // namespace ptri
