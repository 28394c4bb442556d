#include "ptri/oracle.hpp"

#include <algorithm>

namespace ptri {

bool lex_less(const GammaPoint& a, const GammaPoint& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] == b[i]) continue;
        return a[i] < b[i];
    }
    return a.size() < b.size();
}

namespace {

long long ceil_to_ll(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (q * d < n) q += 1;
    return q.convert_to<long long>();
}

long long floor_to_ll(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (q * d > n) q -= 1;
    return q.convert_to<long long>();
}

// Enumerates the strict members of F with coordinates in [0, B], appending to
// out. Levels are filled in ascending support order with interval pruning.
void enumerate_face(const DiscretePolytope& F, long long B, std::vector<GammaPoint>& out) {
    std::set<int> levels_supp = F.support();
    std::vector<int> levels(levels_supp.begin(), levels_supp.end());
    GammaPoint pt(F.q, Gamma::infinity());
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == levels.size()) {
            out.push_back(pt);
            return;
        }
        int j = levels[k];
        const Level& L = F.level(j);
        Omega lo = L.mu.eval(pt);
        if (lo.is_inf()) return;
        long long a = std::max<long long>(0, ceil_to_ll(lo.finite()));
        long long b = B;
        Omega hi = L.nu.eval(pt);
        if (!hi.is_inf()) b = std::min(b, floor_to_ll(hi.finite()));
        for (long long v = a; v <= b; ++v) {
            pt[j - 1] = Gamma::of(v);
            rec(k + 1);
        }
        pt[j - 1] = Gamma::infinity();
    };
    rec(0);
}

} // namespace

std::vector<GammaPoint> enumerate_members(const DiscretePolytope& A, const Window& w,
                                          const std::optional<std::set<int>>& pattern) {
    if (w.q != A.q) throw std::invalid_argument("window dimension mismatch");
    Int total = pow_int(Int(w.B + 2), static_cast<unsigned long long>(w.q));
    if (total > 10000000) throw WindowTooLarge("(B+2)^q = " + total.str() + " exceeds 10^7");

    std::vector<GammaPoint> out;
    for (auto& [J, F] : all_faces(A)) {
        if (pattern && *pattern != J) continue;
        enumerate_face(F, w.B, out);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Rat> lift_point(const PadicSimplex& s, const GammaPoint& a, SplitMix64& rng,
                            int fuzz_digits) {
    std::vector<Rat> x(s.q, Rat(0));
    Int pM = pow_int(Int(s.p), static_cast<unsigned long long>(s.M));
    Int fuzz_mod = pow_int(Int(s.p), static_cast<unsigned long long>(fuzz_digits));
    for (int i = 0; i < s.q; ++i) {
        if (a[i].is_inf()) continue;
        long long j = static_cast<long long>(rng.below(fuzz_mod.convert_to<uint64_t>()));
        Int unit = 1 + pM * j;
        long long v = a[i].finite();
        if (v >= 0)
            x[i] = Rat(pow_int(Int(s.p), static_cast<unsigned long long>(v)) * unit);
        else
            x[i] = Rat(unit, pow_int(Int(s.p), static_cast<unsigned long long>(-v)));
    }
    return x;
}

std::vector<std::vector<Rat>> sample_padic(const PadicSimplex& s, long long depth, int count,
                                           uint64_t seed) {
    SplitMix64 rng(seed);
    Window w{depth, s.q};
    std::vector<GammaPoint> shape_pts =
        enumerate_members(s.shape, w, std::optional<std::set<int>>(s.shape.support()));
    std::vector<std::vector<Rat>> out;
    if (shape_pts.empty()) return out;
    for (int k = 0; k < count; ++k) {
        const GammaPoint& a = shape_pts[rng.below(shape_pts.size())];
        auto x = lift_point(s, a, rng);
        PadicPoint px;
        px.reserve(x.size());
        for (auto& xi : x) px.push_back(PadicNumber::from_rational(s.p, xi));
        if (!member(s, px)) throw std::logic_error("sample_padic produced a non-member");
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace ptri
