#pragma once

#include "ptri/errors.hpp"
#include "ptri/gamma.hpp"
#include "ptri/rational.hpp"

#include <optional>

namespace ptri {

/// Default number of tracked unit digits.
inline constexpr int kDefaultPrecision = 24;

/// Element of Q_p with exact valuation and unit residue tracked to a stated
/// number of digits. Numbers built from rationals keep the rational around,
/// so any predicate on them can be decided at whatever precision it needs;
/// only Hensel roots are truly finite-precision.
class PadicNumber {
  public:
    /// Default state is the zero of an unset prime; any arithmetic use
    /// requires construction through the named factories.
    PadicNumber() = default;

    static PadicNumber zero(long long p);
    static PadicNumber from_rational(long long p, const Rat& r, int prec = kDefaultPrecision);
    static PadicNumber from_int(long long p, long long n, int prec = kDefaultPrecision) {
        return from_rational(p, Rat(n), prec);
    }
    /// Raw form p^v * u with u given modulo p^prec (no exact backing).
    static PadicNumber from_parts(long long p, long long v, const Int& unit, int prec);

    long long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    /// Exact valuation; +inf for zero.
    Gamma valuation() const { return zero_ ? Gamma::infinity() : Gamma::of(v_); }
    long long val_finite() const;
    int precision() const { return prec_; }
    bool has_exact() const { return exact_.has_value(); }
    const Rat& exact() const { return *exact_; }

    /// Unit residue modulo p^M. Recomputed from the exact rational when the
    /// tracked digits do not reach M; throws InsufficientPrecision otherwise.
    Int unit_mod(int M) const;
    /// The tracked unit residue in [1, p^prec - 1].
    const Int& unit() const { return unit_; }

    PadicNumber neg() const;
    PadicNumber add(const PadicNumber& o) const;
    PadicNumber sub(const PadicNumber& o) const { return add(o.neg()); }
    PadicNumber mul(const PadicNumber& o) const;
    PadicNumber div(const PadicNumber& o) const;
    PadicNumber pow(long long k) const;

    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) { return a.add(b); }
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a.sub(b); }
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) { return a.mul(b); }
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) { return a.div(b); }

    /// True equality when both carry exact rationals; otherwise agreement of
    /// valuation and of units up to the smaller tracked precision.
    bool eq(const PadicNumber& o) const;

  private:
    long long p_ = 0;
    bool zero_ = true;
    long long v_ = 0;
    Int unit_ = 0;
    int prec_ = kDefaultPrecision;
    std::optional<Rat> exact_;
};

/// ac_M: unit residue mod p^M of a nonzero element (multiplicative, ac_M(p)=1).
Int ac(const PadicNumber& x, int M);

struct SubgroupSpec {
    enum class Kind { P_N, Q_NM, U_en, D_MR };
    Kind kind;
    long long a = 1; // N (P_N, Q_NM), e (U_en), M (D_MR)
    long long b = 0; // M (Q_NM), n (U_en)

    static SubgroupSpec P(long long N) { return {Kind::P_N, N, 0}; }
    static SubgroupSpec Q(long long N, long long M) { return {Kind::Q_NM, N, M}; }
    static SubgroupSpec U(long long e, long long n) { return {Kind::U_en, e, n}; }
    static SubgroupSpec D(long long M) { return {Kind::D_MR, M, 0}; }
};

bool in_subgroup(const PadicNumber& x, const SubgroupSpec& g);

/// x^{1/e} on Q_{e,2v(e)+1}: the unique root in Q_{1,v(e)+1}, by Newton
/// iteration on the unit part. Result precision is the input's minus v_p(e).
PadicNumber nth_root(const PadicNumber& x, long long e);

/// Total order on |K| u {0}: -1 if |x|<|y|, 0 if equal, +1 if |x|>|y|.
int norm_compare(const PadicNumber& x, const PadicNumber& y);

/// Teichmueller lift of c (1 <= c < p) modulo p^K: the fixed point of t -> t^p.
Int teichmuller(long long p, long long c, int K);

/// All e-th roots of unity of Q_p, as units modulo p^K.
std::vector<Int> roots_of_unity(long long p, long long e, int K);

} // namespace ptri
