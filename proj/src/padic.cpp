#include "ptri/padic.hpp"

namespace ptri {

namespace {

Int pk(long long p, int k) { return pow_int(Int(p), static_cast<unsigned long long>(k)); }

} // namespace

PadicNumber PadicNumber::zero(long long p) {
    PadicNumber x;
    x.p_ = p;
    x.zero_ = true;
    x.exact_ = Rat(0);
    return x;
}

PadicNumber PadicNumber::from_rational(long long p, const Rat& r, int prec) {
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
    if (prec < 1) throw std::invalid_argument("precision must be >= 1");
    if (r == 0) {
        PadicNumber x = zero(p);
        x.prec_ = prec;
        return x;
    }
    PadicNumber x;
    x.p_ = p;
    x.zero_ = false;
    x.prec_ = prec;
    x.exact_ = r;
    long long vn = valuation_int(numerator(r), p);
    long long vd = valuation_int(denominator(r), p);
    x.v_ = vn - vd;
    Int num = numerator(r) / pk(p, static_cast<int>(vn));
    Int den = denominator(r) / pk(p, static_cast<int>(vd));
    Int m = pk(p, prec);
    x.unit_ = mod_floor(num * inv_mod(den, m), m);
    return x;
}

PadicNumber PadicNumber::from_parts(long long p, long long v, const Int& unit, int prec) {
    if (prec < 1) throw std::invalid_argument("precision must be >= 1");
    PadicNumber x;
    x.p_ = p;
    x.zero_ = false;
    x.v_ = v;
    x.prec_ = prec;
    x.unit_ = mod_floor(unit, pk(p, prec));
    if (x.unit_ % p == 0) throw std::invalid_argument("unit residue divisible by p");
    return x;
}

long long PadicNumber::val_finite() const {
    if (zero_) throw ZeroArgument("valuation of zero is +inf");
    return v_;
}

Int PadicNumber::unit_mod(int M) const {
    if (zero_) throw ZeroArgument("unit part of zero");
    if (M < 1) throw std::invalid_argument("modulus exponent must be >= 1");
    if (M <= prec_) return mod_floor(unit_, pk(p_, M));
    if (exact_) {
        long long vn = valuation_int(numerator(*exact_), p_);
        long long vd = valuation_int(denominator(*exact_), p_);
        Int num = numerator(*exact_) / pk(p_, static_cast<int>(vn));
        Int den = denominator(*exact_) / pk(p_, static_cast<int>(vd));
        Int m = pk(p_, M);
        return mod_floor(num * inv_mod(den, m), m);
    }
    throw InsufficientPrecision("need " + std::to_string(M) + " unit digits, have " +
                                std::to_string(prec_));
}

PadicNumber PadicNumber::neg() const {
    if (zero_) return *this;
    PadicNumber x = *this;
    if (x.exact_) x.exact_ = -*x.exact_;
    x.unit_ = mod_floor(-x.unit_, pk(p_, prec_));
    return x;
}

PadicNumber PadicNumber::add(const PadicNumber& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed primes");
    if (zero_) return o;
    if (o.zero_) return *this;
    if (exact_ && o.exact_) {
        Rat s = *exact_ + *o.exact_;
        return from_rational(p_, s, std::min(prec_, o.prec_));
    }
    const PadicNumber& a = (v_ <= o.v_) ? *this : o;
    const PadicNumber& b = (v_ <= o.v_) ? o : *this;
    long long delta = b.v_ - a.v_;
    if (delta > 0) {
        int K = static_cast<int>(std::min<long long>(a.prec_, delta + b.prec_));
        Int m = pk(p_, K);
        Int w = mod_floor(a.unit_mod(K) + pk(p_, static_cast<int>(std::min<long long>(delta, K))) *
                                               b.unit_mod(std::max(1, K - static_cast<int>(delta))),
                          m);
        PadicNumber r;
        r.p_ = p_;
        r.zero_ = false;
        r.v_ = a.v_;
        r.prec_ = K;
        r.unit_ = w;
        return r;
    }
    // Equal valuations: possible cancellation.
    int K = std::min(a.prec_, b.prec_);
    Int m = pk(p_, K);
    Int w = mod_floor(a.unit_mod(K) + b.unit_mod(K), m);
    if (w == 0)
        throw InsufficientPrecision("cancellation exceeds tracked digits in addition");
    long long t = valuation_int(w, p_);
    if (K - t < 1)
        throw InsufficientPrecision("addition result has fewer than one known digit");
    PadicNumber r;
    r.p_ = p_;
    r.zero_ = false;
    r.v_ = a.v_ + t;
    r.prec_ = static_cast<int>(K - t);
    r.unit_ = mod_floor(w / pk(p_, static_cast<int>(t)), pk(p_, r.prec_));
    return r;
}

PadicNumber PadicNumber::mul(const PadicNumber& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed primes");
    if (zero_ || o.zero_) {
        PadicNumber z = zero(p_);
        z.prec_ = std::min(prec_, o.prec_);
        return z;
    }
    if (exact_ && o.exact_)
        return from_rational(p_, *exact_ * *o.exact_, std::min(prec_, o.prec_));
    int K = std::min(prec_, o.prec_);
    PadicNumber r;
    r.p_ = p_;
    r.zero_ = false;
    r.v_ = v_ + o.v_;
    r.prec_ = K;
    r.unit_ = mod_floor(unit_mod(K) * o.unit_mod(K), pk(p_, K));
    return r;
}

PadicNumber PadicNumber::div(const PadicNumber& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed primes");
    if (o.zero_) throw ZeroArgument("division by zero");
    if (zero_) return *this;
    if (exact_ && o.exact_)
        return from_rational(p_, *exact_ / *o.exact_, std::min(prec_, o.prec_));
    int K = std::min(prec_, o.prec_);
    Int m = pk(p_, K);
    PadicNumber r;
    r.p_ = p_;
    r.zero_ = false;
    r.v_ = v_ - o.v_;
    r.prec_ = K;
    r.unit_ = mod_floor(unit_mod(K) * inv_mod(o.unit_mod(K), m), m);
    return r;
}

PadicNumber PadicNumber::pow(long long k) const {
    if (zero_) {
        if (k < 0) throw ZeroArgument("negative power of zero");
        if (k == 0) return from_rational(p_, Rat(1), prec_); // 0^0 = 1 convention
        return *this;
    }
    if (k == 0) return from_rational(p_, Rat(1), prec_);
    if (exact_) {
        Rat b = *exact_, acc(1);
        long long e = k < 0 ? -k : k;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        if (k < 0) acc = Rat(1) / acc;
        return from_rational(p_, acc, prec_);
    }
    PadicNumber base = k < 0 ? from_rational(p_, Rat(1), prec_).div(*this) : *this;
    long long e = k < 0 ? -k : k;
    PadicNumber acc = from_rational(p_, Rat(1), prec_);
    while (e) {
        if (e & 1) acc = acc.mul(base);
        base = base.mul(base);
        e >>= 1;
    }
    return acc;
}

bool PadicNumber::eq(const PadicNumber& o) const {
    if (p_ != o.p_) return false;
    if (exact_ && o.exact_) return *exact_ == *o.exact_;
    if (zero_ || o.zero_) return zero_ == o.zero_;
    if (v_ != o.v_) return false;
    int K = std::min(prec_, o.prec_);
    return unit_mod(K) == o.unit_mod(K);
}

Int ac(const PadicNumber& x, int M) {
    if (x.is_zero()) throw ZeroArgument("ac of zero");
    return x.unit_mod(M);
}

namespace {

// Is the unit u an N-th power of a unit? Decided modulo p^{2 v_p(N) + 1};
// a solution there lifts by Hensel since v(N y^{N-1}) = v(N).
bool unit_is_nth_power(long long p, const Int& u, long long N) {
    long long a = valuation_int(Int(N), p);
    int k = static_cast<int>(2 * a + 1);
    Int m = pk(p, k);
    Int target = mod_floor(u, m);
    for (Int y = 1; y < m; ++y) {
        if (y % p == 0) continue;
        if (pow_mod(y, Int(N), m) == target) return true;
    }
    return false;
}

} // namespace

bool in_subgroup(const PadicNumber& x, const SubgroupSpec& g) {
    long long p = x.prime();
    switch (g.kind) {
    case SubgroupSpec::Kind::Q_NM: {
        long long N = g.a, M = g.b;
        if (N < 1 || M < 1) throw std::invalid_argument("Q_NM needs N,M >= 1");
        if (x.is_zero()) return true;
        if (x.val_finite() % N != 0) return false;
        return x.unit_mod(static_cast<int>(M)) == 1;
    }
    case SubgroupSpec::Kind::P_N: {
        long long N = g.a;
        if (N < 1) throw std::invalid_argument("P_N needs N >= 1");
        if (x.is_zero()) return true; // 0 = 0^N
        if (x.val_finite() % N != 0) return false;
        long long a = valuation_int(Int(N), p);
        Int u = x.unit_mod(static_cast<int>(2 * a + 1));
        return unit_is_nth_power(p, u, N);
    }
    case SubgroupSpec::Kind::U_en: {
        long long e = g.a, n = g.b;
        if (e < 1 || n < 1) throw std::invalid_argument("U_en needs e,n >= 1");
        if (x.is_zero()) return false;
        if (x.val_finite() != 0) return false;
        int K = static_cast<int>(n);
        Int m = pk(p, K);
        Int u = x.unit_mod(K);
        for (const Int& zeta : roots_of_unity(p, e, K)) {
            if (mod_floor(u * inv_mod(zeta, m), m) == 1) return true;
        }
        return false;
    }
    case SubgroupSpec::Kind::D_MR: {
        long long M = g.a;
        if (M < 1) throw std::invalid_argument("D_MR needs M >= 1");
        if (x.is_zero()) return true;
        if (x.val_finite() < 0) return false;
        return x.unit_mod(static_cast<int>(M)) == 1;
    }
    }
    throw std::logic_error("unreachable");
}

PadicNumber nth_root(const PadicNumber& x, long long e) {
    if (e < 1) throw std::invalid_argument("root index must be >= 1");
    long long p = x.prime();
    if (x.is_zero()) return x;
    long long a = valuation_int(Int(e), p);
    if (x.precision() < 2 * a + 1)
        throw InsufficientPrecision("nth_root needs at least 2 v(e)+1 digits");
    if (!in_subgroup(x, SubgroupSpec::Q(e, 2 * a + 1)))
        throw NotInDomain("argument not in Q_{e,2v(e)+1}");
    int Kt = static_cast<int>(x.precision() - a);
    if (Kt < 1) throw InsufficientPrecision("no digits left after dividing by v(e)");

    // Newton iteration for w^e = u, w = 1 mod p^{a+1}, carried modulo p^{Kt+2a+2}.
    int KW = static_cast<int>(Kt + 2 * a + 2);
    Int m = pk(p, KW);
    Int u = x.unit_mod(std::min(KW, x.precision()));
    Int pa = pk(p, static_cast<int>(a));
    Int w = 1;
    Int goal = pk(p, static_cast<int>(Kt + a));
    for (int iter = 0; iter < 4 * KW + 8; ++iter) {
        Int err = mod_floor(pow_mod(w, Int(e), m) - u, m);
        if (mod_floor(err, goal) == 0) break;
        Int den = mod_floor(Int(e) * pow_mod(w, Int(e - 1), m), m);
        Int denu = den / pa; // exact: v(den) = a
        if (denu % p == 0) throw std::logic_error("nth_root: derivative valuation drift");
        if (err % pa != 0) throw std::logic_error("nth_root: error not divisible by p^a");
        Int step = mod_floor((err / pa) * inv_mod(denu, m), m);
        w = mod_floor(w - step, m);
    }
    if (mod_floor(mod_floor(pow_mod(w, Int(e), m) - u, m), goal) != 0)
        throw std::logic_error("nth_root: Newton iteration did not converge");
    PadicNumber y = PadicNumber::from_parts(p, x.val_finite() / e, mod_floor(w, pk(p, Kt)), Kt);
    return y;
}

int norm_compare(const PadicNumber& x, const PadicNumber& y) {
    Gamma vx = x.valuation(), vy = y.valuation();
    if (vx == vy) return 0;
    // |x| < |y|  iff  v(x) > v(y)
    return vy < vx ? -1 : 1;
}

Int teichmuller(long long p, long long c, int K) {
    Int m = pk(p, K);
    Int t = mod_floor(Int(c), m);
    for (int i = 0; i <= K + 1; ++i) {
        Int t2 = pow_mod(t, Int(p), m);
        if (t2 == t) break;
        t = t2;
    }
    return t;
}

std::vector<Int> roots_of_unity(long long p, long long e, int K) {
    std::vector<Int> out;
    if (p == 2) {
        out.push_back(Int(1));
        if (e % 2 == 0) out.push_back(pk(2, K) - 1); // -1
        return out;
    }
    for (long long c = 1; c < p; ++c) {
        if (pow_mod(Int(c), Int(e), Int(p)) == 1) out.push_back(teichmuller(p, c, K));
    }
    return out;
}

} // namespace ptri
