#pragma once

#include "ptri/rational.hpp"

#include <map>
#include <vector>

namespace ptri {

struct LpResult {
    enum class Status { Optimal, Unbounded, Infeasible };
    Status status = Status::Infeasible;
    Rat value;            // optimal objective value (Optimal)
    std::vector<Rat> x;   // optimal point (Optimal), or feasible point (Unbounded)
    std::vector<Rat> ray; // recession direction with objective increase (Unbounded)

    bool optimal() const { return status == Status::Optimal; }
    bool unbounded() const { return status == Status::Unbounded; }
    bool infeasible() const { return status == Status::Infeasible; }
};

/// Exact rational LP over nonnegative variables:
///   maximize c.x  subject to  A x <= b,  x >= 0.
/// Dictionary simplex with Bland's rule; two phases; no floating point.
class SimplexLP {
  public:
    explicit SimplexLP(int nvars) : n_(nvars) {}

    /// Adds a row sum_i coef[i]*x_i <= rhs. Keys are 0-based variable indices.
    void add_le(const std::map<int, Rat>& coef, const Rat& rhs);
    /// coef.x >= rhs
    void add_ge(const std::map<int, Rat>& coef, const Rat& rhs);
    /// coef.x == rhs
    void add_eq(const std::map<int, Rat>& coef, const Rat& rhs);

    LpResult maximize(const std::map<int, Rat>& objective) const;
    LpResult minimize(const std::map<int, Rat>& objective) const;
    /// Phase-1 only: does a nonnegative solution of the system exist?
    bool feasible() const;

    int nvars() const { return n_; }

  private:
    int n_;
    std::vector<std::vector<Rat>> rows_; // dense coefficient rows
    std::vector<Rat> rhs_;
};

} // namespace ptri
