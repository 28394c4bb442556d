#pragma once

#include "ptri/padic.hpp"
#include "ptri/polytope.hpp"

#include <functional>

namespace ptri {

/// p-adic simplex of index M: v^{-1}(shape) in D^M R^q, with shape a discrete
/// simplex whose coordinates are all >= 0.
struct PadicSimplex {
    long long p = 3;
    int M = 1;
    int q = 0;
    DiscretePolytope shape;

    std::set<int> supp() const { return shape.support(); }
};

using PadicPoint = std::vector<PadicNumber>;

/// Strict membership: every coordinate in D^M R and v(x) in the shape
/// (support-exact). Needs coordinate precision >= M.
bool member(const PadicSimplex& s, const PadicPoint& x);

GammaPoint valuation_vector(const PadicPoint& x);

struct FaceChain {
    /// All faces including s itself, ascending by specialization.
    std::vector<PadicSimplex> chain;
    /// Index into chain of the facet (largest proper face); -1 when closed.
    int facet = -1;
};

/// The linearly ordered faces of a simplex. Throws ValidationError when the
/// shape is not a simplex.
FaceChain faces_of(const PadicSimplex& s);

struct Block {
    int q = 0;
    bool rooted = false;
    std::vector<PadicSimplex> simplexes;
};

struct SimplicialComplex {
    long long p = 3;
    int M = 1;
    std::vector<Block> blocks;
};

struct ComplexReport {
    bool is_complex = false;
    bool is_monoplex = false;
    bool is_closed = false;
    bool is_well_dispatched = false;
    std::vector<std::string> violations;
};

/// Specialization order within a block: T <= S iff shape(T) lies inside the
/// face of shape(S) with T's support. All checks run on the Gamma shapes.
bool specializes(const PadicSimplex& T, const PadicSimplex& S);

ComplexReport validate_complex(const SimplicialComplex& c);

struct SimplexRef {
    int block = 0;
    int index = 0;
    friend bool operator<(const SimplexRef& a, const SimplexRef& b) {
        return a.block != b.block ? a.block < b.block : a.index < b.index;
    }
    friend bool operator==(const SimplexRef& a, const SimplexRef& b) {
        return a.block == b.block && a.index == b.index;
    }
};

/// Retraction of a closed complex onto a lower subcomplex: identity on the
/// target, coordinate projection to the facet elsewhere, composed down the
/// specialization chains; clopen simplexes fall to a fixed base point.
class Retraction {
  public:
    struct Step {
        enum class Kind { Identity, Project, Base } kind = Kind::Identity;
        int facet_index = -1;          // Project: member index of the facet
        std::set<int> facet_supp;      // Project: coordinates kept
    };

    std::pair<SimplexRef, PadicPoint> apply(const SimplexRef& at, const PadicPoint& x) const;
    /// Locates the member simplex containing x, then applies.
    std::pair<SimplexRef, PadicPoint> apply(int block, const PadicPoint& x) const;

    const SimplicialComplex* complex = nullptr;
    std::vector<std::vector<Step>> steps; // per block, per simplex
    SimplexRef base_ref;
    PadicPoint base_point;
    std::set<SimplexRef> target;
};

Retraction build_retraction(const SimplicialComplex& c, const std::set<SimplexRef>& lower);

} // namespace ptri
