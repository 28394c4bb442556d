#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ptri {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct malformed_input : std::runtime_error {
    explicit malformed_input(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "a/b" or "a" (optional sign, decimal digits). Throws malformed_input.
Rat parse_rat(const std::string& s);

/// Canonical form: "a" when the denominator is 1, otherwise "a/b" with b > 0.
std::string rat_str(const Rat& r);

std::string int_str(const Int& z);

/// v_p of a nonzero integer. Throws std::invalid_argument on zero.
long long valuation_int(const Int& z, long long p);

/// v_p of a nonzero rational: v(num) - v(den).
long long valuation_rat(const Rat& r, long long p);

Int pow_int(const Int& base, unsigned long long e);

/// base^e mod m, e >= 0, m > 1.
Int pow_mod(const Int& base, const Int& e, const Int& m);

/// Inverse of a mod m for gcd(a, m) = 1.
Int inv_mod(const Int& a, const Int& m);

/// Least nonnegative residue.
Int mod_floor(const Int& a, const Int& m);

} // namespace ptri
