#pragma once

#include "ptri/rational.hpp"

#include <compare>
#include <map>
#include <set>
#include <vector>

namespace ptri {

/// Element of Gamma = Z u {+inf}, the value group with v(0) = +inf.
struct Gamma {
    bool inf = true;
    long long n = 0;

    static Gamma infinity() { return Gamma{true, 0}; }
    static Gamma of(long long k) { return Gamma{false, k}; }

    bool is_inf() const { return inf; }
    long long finite() const {
        if (inf) throw std::logic_error("finite() on +inf");
        return n;
    }
    friend bool operator==(const Gamma& a, const Gamma& b) {
        return a.inf == b.inf && (a.inf || a.n == b.n);
    }
    // order: finite < +inf
    friend bool operator<(const Gamma& a, const Gamma& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.n < b.n;
    }
    friend bool operator<=(const Gamma& a, const Gamma& b) { return a == b || a < b; }
};

/// Point of Gamma^q. Coordinate i (1-based) lives at coords[i-1].
using GammaPoint = std::vector<Gamma>;

/// Support = set of indices (1-based) with finite coordinate.
std::set<int> support(const GammaPoint& a);

/// Coordinate projection onto the face with support J: keeps J, sets the rest to +inf.
GammaPoint project(const GammaPoint& a, const std::set<int>& J);

std::string gamma_str(const Gamma& g);
std::string point_str(const GammaPoint& a);
std::string supp_str(const std::set<int>& J);

/// Value in Omega = Q u {+inf}, the compactified divisible hull.
struct Omega {
    bool inf = true;
    Rat q;

    static Omega infinity() { return Omega{true, Rat(0)}; }
    static Omega of(const Rat& r) { return Omega{false, r}; }
    bool is_inf() const { return inf; }
    const Rat& finite() const {
        if (inf) throw std::logic_error("finite() on +inf");
        return q;
    }
    friend bool operator==(const Omega& a, const Omega& b) {
        return a.inf == b.inf && (a.inf || a.q == b.q);
    }
    friend bool operator<(const Omega& a, const Omega& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.q < b.q;
    }
    friend bool operator<=(const Omega& a, const Omega& b) { return a == b || a < b; }
};

/// Affine map f(x) = c0 + sum_{i in I} coef_i x_i into Omega, or the constant +inf.
/// Keys of coef are 1-based coordinate indices.
struct AffineMap {
    bool inf = false;
    Rat c0;
    std::map<int, Rat> coef;

    static AffineMap constant_inf() {
        AffineMap f;
        f.inf = true;
        return f;
    }
    static AffineMap constant(const Rat& r) {
        AffineMap f;
        f.c0 = r;
        return f;
    }
    static AffineMap coordinate(int i) {
        AffineMap f;
        f.coef[i] = 1;
        return f;
    }
    bool is_inf() const { return inf; }

    /// Evaluates at a point whose referenced coordinates must be finite.
    Omega eval(const GammaPoint& a) const;
    /// Evaluation over rationals (LP side).
    Rat eval_rat(const std::map<int, Rat>& x) const;

    friend bool operator==(const AffineMap& f, const AffineMap& g) {
        if (f.inf != g.inf) return false;
        if (f.inf) return true;
        return f.c0 == g.c0 && f.coef == g.coef;
    }
};

AffineMap operator-(const AffineMap& f, const AffineMap& g);

/// lcm of all coefficient denominators (>= 1); an affine map with this scale
/// takes values in (1/D)Z at integer points.
Int denominator_lcm(const AffineMap& f);

} // namespace ptri
