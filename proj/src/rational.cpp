#include "ptri/rational.hpp"

namespace ptri {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw malformed_input("empty rational literal");
    auto slash = s.find('/');
    auto check_int = [](const std::string& t) {
        if (t.empty()) throw malformed_input("empty integer literal");
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw malformed_input("sign without digits: " + t);
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i])))
                throw malformed_input("bad digit in rational literal: " + t);
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(s));
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    check_int(a);
    check_int(b);
    Int den(b);
    if (den == 0) throw malformed_input("zero denominator: " + s);
    return Rat(Int(a), den);
}

std::string rat_str(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string int_str(const Int& z) { return z.str(); }

long long valuation_int(const Int& z, long long p) {
    if (z == 0) throw std::invalid_argument("valuation of zero integer");
    Int a = abs(z);
    long long v = 0;
    Int q, r;
    while (true) {
        divide_qr(a, Int(p), q, r);
        if (r != 0) break;
        a = q;
        ++v;
    }
    return v;
}

long long valuation_rat(const Rat& r, long long p) {
    if (r == 0) throw std::invalid_argument("valuation of zero rational");
    return valuation_int(numerator(r), p) - valuation_int(denominator(r), p);
}

Int pow_int(const Int& base, unsigned long long e) {
    Int acc = 1, b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Int pow_mod(const Int& base, const Int& e, const Int& m) {
    Int acc = 1, b = mod_floor(base, m), k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = acc * b % m;
        b = b * b % m;
        k >>= 1;
    }
    return acc;
}

Int inv_mod(const Int& a, const Int& m) {
    // extended Euclid
    Int r0 = m, r1 = mod_floor(a, m), t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("inv_mod: not invertible");
    return mod_floor(t0, m);
}

Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

} // namespace ptri
