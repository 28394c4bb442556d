#pragma once

#include "ptri/errors.hpp"
#include "ptri/gamma.hpp"
#include "ptri/lp.hpp"

#include <optional>
#include <set>
#include <vector>

namespace ptri {

/// One level of a discrete polytope presentation.
/// Supported level j carries bounds mu <= x_j <= nu over the supported
/// coordinates below j; nu may be the constant +inf.
struct Level {
    bool supported = false;
    AffineMap mu;
    AffineMap nu;
};

/// Level-by-level presentation of a discrete polytope in Gamma^q.
/// Membership of a point with matching support: mu_j(a) <= a_j <= nu_j(a) at
/// every supported level j. Points of the closure with smaller support are
/// members of the corresponding face polytope.
struct DiscretePolytope {
    int q = 0;
    std::vector<Level> levels;

    std::set<int> support() const;
    bool has_level(int j) const { return j >= 1 && j <= q && levels[j - 1].supported; }
    const Level& level(int j) const { return levels[j - 1]; }

    /// The point polytope {(+inf,...,+inf)} in Gamma^q.
    static DiscretePolytope point(int q);
};

/// Affine inequality sum coef_i x_i <= rhs over level coordinates (1-based keys).
struct LinCon {
    std::map<int, Rat> coef;
    Rat rhs;
};

/// All presentation inequalities of A (mu_j <= x_j, x_j <= nu_j for finite nu).
std::vector<LinCon> presentation_constraints(const DiscretePolytope& A);

/// LP over the rational relaxation relax(A): variables are the supported
/// levels in ascending order; all variables implicitly >= 0.
struct Relaxation {
    std::vector<int> vars;        // supported levels, ascending
    std::map<int, int> var_of;    // level -> LP variable
    SimplexLP lp;
    Relaxation() : lp(0) {}
};
Relaxation make_relaxation(const DiscretePolytope& A, const std::vector<LinCon>& extra = {});

// ---------------------------------------------------------------------------
// Integer-point machinery on staircase systems (exact; loud on budget).
// ---------------------------------------------------------------------------

/// Lexicographically smallest nonnegative integer solution of the system, or
/// nullopt when none exists. Branch and bound over exact LP relaxations;
/// throws DecisionBudgetExceeded instead of guessing when the search cannot
/// be completed within the budget.
std::optional<std::vector<long long>>
find_integer_point(const std::vector<int>& vars, const std::vector<LinCon>& cons);

/// Lexicographically smallest member of A (integer coordinates on supp(A)).
std::optional<GammaPoint> lex_min_member(const DiscretePolytope& A);

bool set_nonempty(const DiscretePolytope& A);
bool set_subset(const DiscretePolytope& A, const DiscretePolytope& B);
bool set_equal(const DiscretePolytope& A, const DiscretePolytope& B);
bool set_disjoint(const DiscretePolytope& A, const DiscretePolytope& B);

// ---------------------------------------------------------------------------
// Face calculus
// ---------------------------------------------------------------------------

enum class ExtendKind { Finite, Infinite, NotExtendable };

struct Extension {
    ExtendKind kind = ExtendKind::NotExtendable;
    AffineMap g; // set when kind == Finite; affine over the J coordinates
};

/// Continuous-extension classification of the affine f toward the face F_J(A),
/// decided by exact LP over relax(A):
///  - Finite(g): f factors through pi_J on relax(A); g is a representative
///    affine formula in the J coordinates.
///  - Infinite: f tends to +inf uniformly toward the face (no recession
///    direction of relax(A) with all dropped coordinates >= 1 keeps f bounded).
///  - NotExtendable otherwise.
/// The public entry checks F_J(A) != empty first and throws EmptyFace.
Extension extend_to_face(const AffineMap& f, const DiscretePolytope& A, const std::set<int>& J);

/// Classification without the face-nonemptiness precondition check.
Extension extend_impl(const AffineMap& f, const DiscretePolytope& A, const std::set<int>& J);

/// F_J(A) as a presented polytope, or nullopt when the face is empty.
/// Throws NotLargelyContinuous when a defining map fails to extend.
std::optional<DiscretePolytope> face(const DiscretePolytope& A, const std::set<int>& J);

/// Strict membership: support(a) == support(A) and all bounds hold.
bool strict_contains(const DiscretePolytope& A, const GammaPoint& a);

/// Closure membership: a lies in the face of A with support(a).
bool contains(const DiscretePolytope& A, const GammaPoint& a);

struct SimplexReport {
    bool simplex = false;
    // Supports of the nonempty faces, ascending along the chain when simplex.
    std::vector<std::set<int>> chain;
    std::vector<DiscretePolytope> chain_faces;
    std::optional<std::pair<std::set<int>, std::set<int>>> incomparable;
};

/// Enumerates all faces and checks that they are linearly ordered by the
/// recursive face-of relation.
SimplexReport is_simplex(const DiscretePolytope& A);

/// All nonempty faces of A, keyed by support.
std::vector<std::pair<std::set<int>, DiscretePolytope>> all_faces(const DiscretePolytope& A);

struct PolytopeReport {
    bool valid = false;
    std::vector<std::string> violations;
};

/// Validates the presentation invariants: structural staircase shape,
/// 0 <= mu_j <= nu_j at the integer points of the socle, large continuity of
/// every bound on every socle face, and nonemptiness.
PolytopeReport validate_polytope(const DiscretePolytope& A);

} // namespace ptri
