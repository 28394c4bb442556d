#pragma once

#include "ptri/errors.hpp"
#include "ptri/rational.hpp"

#include <map>
#include <vector>

namespace ptri {

struct ZeroPolynomial : std::runtime_error {
    explicit ZeroPolynomial(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse polynomial in X_1..X_m and T. Exponent tuples have length m+1 with
/// the T exponent last. No zero coefficients are stored.
struct Polynomial {
    int m = 0;
    std::map<std::vector<int>, Rat> terms;

    static Polynomial zero(int m) { return Polynomial{m, {}}; }
    static Polynomial constant(int m, const Rat& c);
    static Polynomial variable(int m, int i); // 1-based; i = m+1 is T

    bool is_zero() const { return terms.empty(); }
    long long total_degree() const; // -1 for the zero polynomial
    long long degree_in_T() const;

    void add_term(const std::vector<int>& e, const Rat& c);
    Polynomial add(const Polynomial& o) const;
    Polynomial mul(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    /// Terms of exact total degree d.
    Polynomial homogeneous_part(long long d) const;
    /// Coefficient of T^k, a polynomial in the X variables (T exponent 0).
    Polynomial coeff_of_T(long long k) const;
    Rat eval(const std::vector<Rat>& xt) const; // xt has m+1 entries

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.m == b.m && a.terms == b.terms;
    }
};

/// Top homogeneous component of the product of the family.
Polynomial leading_form(const std::vector<Polynomial>& F);

/// f(X + eta T, T): the shear substitution X_i -> X_i + eta_i T.
Polynomial shear(const Polynomial& f, const std::vector<Rat>& eta);

/// Smallest grid point eta = p^s (a_1..a_m), a_i in {0..d}, lexicographic,
/// with leading_form(F)(eta, 1) != 0. Guaranteed to exist: a nonzero
/// polynomial of degree d cannot vanish on a (d+1)-point grid per variable.
std::vector<Rat> find_direction(const std::vector<Polynomial>& F, long long s, long long p);

struct DirectionReport {
    bool ok = false;
    Rat leading_value;                // p_F^o(eta, 1)
    std::vector<Rat> leading_T_coeff; // per family member: coeff of T^{deg f}
    std::string witness;              // failure description when !ok
};

/// Checks p_F^o(eta,1) != 0 and, per member, that the T^{deg f} coefficient
/// of the shear is the nonzero constant f^o(eta,1); samples fibers to confirm
/// no shear vanishes identically in T at rational base points.
DirectionReport certify_direction(const std::vector<Polynomial>& F, const std::vector<Rat>& eta);

} // namespace ptri
