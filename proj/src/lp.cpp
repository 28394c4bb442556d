#include "ptri/lp.hpp"

#include <limits>

namespace ptri {

namespace {

// Dictionary simplex over exact rationals.
//
// Variables 0..n-1 are the structural ones, n..n+m-1 the slacks of the m rows.
// The dictionary keeps, for each row i,
//     x_basic[i] = bvec[i] + sum_j T[i][j] * x_nonbasic[j]
// and the objective as  z = z0 + sum_j zc[j] * x_nonbasic[j].
class Dictionary {
  public:
    Dictionary(int n, const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b)
        : n_(n), m_(static_cast<int>(A.size())) {
        T_.assign(m_, std::vector<Rat>(n_));
        bvec_.resize(m_);
        basic_.resize(m_);
        nonbasic_.resize(n_);
        for (int j = 0; j < n_; ++j) nonbasic_[j] = j;
        for (int i = 0; i < m_; ++i) {
            basic_[i] = n_ + i;
            bvec_[i] = b[i];
            for (int j = 0; j < n_; ++j) T_[i][j] = -A[i][j];
        }
        zc_.assign(n_, Rat(0));
        z0_ = 0;
    }

    // Returns false when the constraint system has no nonnegative solution.
    bool make_feasible() {
        int r = -1;
        for (int i = 0; i < m_; ++i)
            if (bvec_[i] < 0 && (r < 0 || bvec_[i] < bvec_[r])) r = i;
        if (r < 0) return true;

        // Auxiliary column for x0 (variable id n_+m_): x_B[i] = b_i + x0 + ...
        saved_zc_ = zc_;
        saved_z0_ = z0_;
        for (auto& row : T_) row.push_back(Rat(1));
        nonbasic_.push_back(n_ + m_);
        zc_.assign(n_ + 1, Rat(0));
        zc_[n_] = -1; // maximize -x0
        z0_ = 0;
        pivot(r, n_);
        if (run() != Step::Optimal) throw std::logic_error("phase 1 cannot be unbounded");
        bool ok = (z0_ == 0);
        if (ok) drop_aux();
        return ok;
    }

    enum class Step { Optimal, Unbounded };

    Step run() {
        long guard = 0;
        while (true) {
            if (++guard > 2000000)
                throw std::logic_error("simplex pivot guard tripped (cycling?)");
            int s = -1;
            for (int j = 0; j < width(); ++j)
                if (zc_[j] > 0 && (s < 0 || nonbasic_[j] < nonbasic_[s])) s = j;
            if (s < 0) return Step::Optimal;
            int r = -1;
            Rat best;
            for (int i = 0; i < m_; ++i) {
                if (T_[i][s] < 0) {
                    Rat ratio = -bvec_[i] / T_[i][s];
                    if (r < 0 || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
                        r = i;
                        best = ratio;
                    }
                }
            }
            if (r < 0) {
                unbounded_col_ = s;
                return Step::Unbounded;
            }
            pivot(r, s);
        }
    }

    void set_objective(const std::vector<Rat>& c) {
        // c has length n_ (structural variables only; slacks weigh 0).
        zc_.assign(width(), Rat(0));
        z0_ = 0;
        for (int j = 0; j < width(); ++j)
            if (nonbasic_[j] < n_) zc_[j] += c[nonbasic_[j]];
        for (int i = 0; i < m_; ++i) {
            if (basic_[i] < n_) {
                const Rat& ci = c[basic_[i]];
                if (ci == 0) continue;
                z0_ += ci * bvec_[i];
                for (int j = 0; j < width(); ++j) zc_[j] += ci * T_[i][j];
            }
        }
    }

    Rat objective_value() const { return z0_; }

    std::vector<Rat> point() const {
        std::vector<Rat> x(n_, Rat(0));
        for (int i = 0; i < m_; ++i)
            if (basic_[i] < n_) x[basic_[i]] = bvec_[i];
        return x;
    }

    std::vector<Rat> ray() const {
        std::vector<Rat> d(n_, Rat(0));
        int s = unbounded_col_;
        if (nonbasic_[s] < n_) d[nonbasic_[s]] = 1;
        for (int i = 0; i < m_; ++i)
            if (basic_[i] < n_) d[basic_[i]] = T_[i][s];
        return d;
    }

  private:
    int width() const { return static_cast<int>(nonbasic_.size()); }

    void pivot(int r, int s) {
        Rat a = T_[r][s];
        if (a == 0) throw std::logic_error("pivot on zero entry");
        Rat inv = Rat(1) / a;
        std::vector<Rat>& row = T_[r];
        Rat nb = -bvec_[r] * inv;
        std::vector<Rat> nrow(width());
        for (int j = 0; j < width(); ++j) nrow[j] = (j == s) ? inv : -row[j] * inv;
        bvec_[r] = nb;
        T_[r] = nrow;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            Rat f = T_[i][s];
            if (f == 0) continue;
            bvec_[i] += f * nb;
            for (int j = 0; j < width(); ++j) {
                if (j == s)
                    T_[i][j] = f * nrow[j];
                else
                    T_[i][j] += f * nrow[j];
            }
        }
        {
            Rat f = zc_[s];
            if (f != 0) {
                z0_ += f * nb;
                for (int j = 0; j < width(); ++j) {
                    if (j == s)
                        zc_[j] = f * nrow[j];
                    else
                        zc_[j] += f * nrow[j];
                }
            }
        }
        std::swap(basic_[r], nonbasic_[s]);
    }

    void drop_aux() {
        int aux = n_ + m_;
        // If x0 stayed basic (value 0 at the phase-1 optimum), pivot it out.
        for (int i = 0; i < m_; ++i) {
            if (basic_[i] == aux) {
                int s = -1;
                for (int j = 0; j < width(); ++j)
                    if (T_[i][j] != 0 && nonbasic_[j] != aux) { s = j; break; }
                if (s < 0) {
                    // Redundant zero row: replace the basic id by a fresh unused slack slot.
                    // The row constrains nothing; keep it with bvec 0.
                    basic_[i] = aux; // handled below by column removal only
                    break;
                }
                pivot(i, s);
                break;
            }
        }
        int col = -1;
        for (int j = 0; j < width(); ++j)
            if (nonbasic_[j] == aux) col = j;
        if (col >= 0) {
            for (auto& row : T_) row.erase(row.begin() + col);
            nonbasic_.erase(nonbasic_.begin() + col);
        }
        zc_ = saved_zc_;
        z0_ = saved_z0_;
        if (static_cast<int>(zc_.size()) != width()) zc_.resize(width(), Rat(0));
    }

    int n_, m_;
    std::vector<std::vector<Rat>> T_;
    std::vector<Rat> bvec_, zc_, saved_zc_;
    Rat z0_, saved_z0_;
    std::vector<int> basic_, nonbasic_;
    int unbounded_col_ = -1;
};

} // namespace

void SimplexLP::add_le(const std::map<int, Rat>& coef, const Rat& rhs) {
    std::vector<Rat> row(n_, Rat(0));
    for (auto& [i, c] : coef) {
        if (i < 0 || i >= n_) throw std::logic_error("SimplexLP: variable out of range");
        row[i] = c;
    }
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs);
}

void SimplexLP::add_ge(const std::map<int, Rat>& coef, const Rat& rhs) {
    std::map<int, Rat> neg;
    for (auto& [i, c] : coef) neg[i] = -c;
    add_le(neg, -rhs);
}

void SimplexLP::add_eq(const std::map<int, Rat>& coef, const Rat& rhs) {
    add_le(coef, rhs);
    add_ge(coef, rhs);
}

LpResult SimplexLP::maximize(const std::map<int, Rat>& objective) const {
    LpResult res;
    if (n_ == 0) {
        // No variables: rows are constant constraints 0 <= rhs.
        for (size_t i = 0; i < rhs_.size(); ++i)
            if (rhs_[i] < 0) return res; // infeasible
        res.status = LpResult::Status::Optimal;
        res.value = 0;
        return res;
    }
    Dictionary dict(n_, rows_, rhs_);
    if (!dict.make_feasible()) return res;
    std::vector<Rat> c(n_, Rat(0));
    for (auto& [i, ci] : objective) {
        if (i < 0 || i >= n_) throw std::logic_error("SimplexLP: objective variable out of range");
        c[i] = ci;
    }
    dict.set_objective(c);
    if (dict.run() == Dictionary::Step::Unbounded) {
        res.status = LpResult::Status::Unbounded;
        res.x = dict.point();
        res.ray = dict.ray();
        return res;
    }
    res.status = LpResult::Status::Optimal;
    res.value = dict.objective_value();
    res.x = dict.point();
    return res;
}

LpResult SimplexLP::minimize(const std::map<int, Rat>& objective) const {
    std::map<int, Rat> neg;
    for (auto& [i, c] : objective) neg[i] = -c;
    LpResult res = maximize(neg);
    if (res.optimal()) res.value = -res.value;
    return res;
}

bool SimplexLP::feasible() const {
    return maximize({}).optimal();
}

} // namespace ptri
