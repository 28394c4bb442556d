#pragma once

#include "ptri/simplex.hpp"

#include <cstdint>
#include <optional>

namespace ptri {

/// splitmix64: x += 0x9e3779b97f4a7c15; z = x; z = (z ^ (z >> 30)) *
/// 0xbf58476d1ce4e5b9; z = (z ^ (z >> 27)) * 0x94d049bb133111eb; z ^ (z >> 31).
/// Fixed so that every implementation reproduces samples bit-exactly.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n) by rejection-free reduction (n small here, bias
    /// negligible is not acceptable: use rejection).
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("below(0)");
        uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= lim);
        return v % n;
    }
    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }
};

struct Window {
    long long B = 8;
    int q = 1;
};

/// All points of ({0..B} u {+inf})^q lying in the closure of A (face-resolved
/// membership), lexicographically sorted with +inf greatest. An optional
/// support filter keeps one pattern only. Throws WindowTooLarge when
/// (B+2)^q > 10^7.
std::vector<GammaPoint> enumerate_members(const DiscretePolytope& A, const Window& w,
                                          const std::optional<std::set<int>>& pattern = {});

/// Deterministic pseudo-random rational points of s with all valuations
/// <= depth; every returned point passes member(). May return fewer than
/// count if the simplex is thin within the window.
std::vector<std::vector<Rat>> sample_padic(const PadicSimplex& s, long long depth, int count,
                                           uint64_t seed);

/// Lifts a shape point to a point of the simplex: coordinate p^{a_i} * unit
/// with unit = 1 + p^M * j_i drawn from the generator (unit 1 when j_i = 0).
std::vector<Rat> lift_point(const PadicSimplex& s, const GammaPoint& a, SplitMix64& rng,
                            int fuzz_digits = 2);

bool lex_less(const GammaPoint& a, const GammaPoint& b);

} // namespace ptri
