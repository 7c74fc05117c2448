#include "momentcone/lp.hpp"

#include <stdexcept>
#include <string>

namespace momentcone::exactla {

namespace {

// Standard-form working tableau.  Column layout: split original variables,
// then one slack/surplus per inequality row, then artificials; rhs kept as a
// separate slot at index `ncols` of each row vector.
struct Tableau {
    std::vector<std::vector<Scalar>> t;  // rows * (ncols + 1)
    std::vector<Scalar> red;             // reduced-cost row, size ncols + 1
    std::vector<std::size_t> basis;      // basic column per row
    std::size_t ncols = 0;
    std::size_t first_artificial = 0;
    std::vector<std::size_t> nz_;  // pivot-row support scratch

    Scalar& rhs(std::size_t i) { return t[i][ncols]; }

    void pivot(std::size_t row, std::size_t col) {
        const Scalar piv = t[row][col];
        const Scalar one(1);
        if (piv != one)
            for (auto& v : t[row])
                if (!v.is_zero()) v /= piv;
        // Only the nonzero pivot-row columns take part in the updates.
        nz_.clear();
        for (std::size_t j = 0; j <= ncols; ++j)
            if (!t[row][j].is_zero()) nz_.push_back(j);
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == row || t[i][col].is_zero()) continue;
            const Scalar f = t[i][col];
            for (std::size_t j : nz_) t[i][j] -= f * t[row][j];
        }
        if (!red[col].is_zero()) {
            const Scalar f = red[col];
            for (std::size_t j : nz_) red[j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Prices the given cost vector into the reduced-cost row.
    void load_costs(const std::vector<Scalar>& cost) {
        red.assign(ncols + 1, Scalar(0));
        for (std::size_t j = 0; j < ncols; ++j) red[j] = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i) {
            const Scalar cb = cost[basis[i]];
            if (cb.is_zero()) continue;
            for (std::size_t j = 0; j <= ncols; ++j) {
                if (t[i][j].is_zero()) continue;
                red[j] -= cb * t[i][j];
            }
        }
    }

    // Minimizes the loaded costs with Bland's rule.  Columns >= enter_limit
    // never enter the basis.  Returns false when unbounded.
    bool run(std::size_t enter_limit) {
        for (;;) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < enter_limit; ++j) {
                if (red[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols) return true;  // optimal
            std::size_t leave = t.size();
            Scalar best_ratio;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i][enter].sign() <= 0) continue;
                Scalar ratio = t[i][ncols] / t[i][enter];
                if (leave == t.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == t.size()) return false;  // unbounded direction
            pivot(leave, enter);
        }
    }
};

}  // namespace

LPResult lp_solve(const LPProblem& p) {
    const std::size_t n = p.num_vars();
    const std::size_t m = p.num_rows();
    if (p.a.rows() != m || (m > 0 && p.a.cols() != n) || p.sense.size() != m)
        throw std::invalid_argument("inconsistent LP dimensions");
    if (!p.free_var.empty() && p.free_var.size() != n)
        throw std::invalid_argument("free_var size mismatch");

    auto is_free = [&](std::size_t j) { return !p.free_var.empty() && p.free_var[j]; };

    // Internally we always minimize; c_work is the maximization objective.
    std::vector<Scalar> c_work(n);
    for (std::size_t j = 0; j < n; ++j)
        c_work[j] = p.maximize ? p.objective[j] : -p.objective[j];

    // Column layout for split variables.
    std::vector<std::size_t> col_plus(n), col_minus(n, SIZE_MAX);
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < n; ++j) {
        col_plus[j] = ncols++;
        if (is_free(j)) col_minus[j] = ncols++;
    }
    const std::size_t var_cols = ncols;

    // Row standardization: nonnegative rhs.
    std::vector<int> flip(m, 1);
    std::vector<Sense> sense(m);
    for (std::size_t i = 0; i < m; ++i) {
        sense[i] = p.sense[i];
        if (p.rhs[i].sign() < 0) {
            flip[i] = -1;
            if (sense[i] == Sense::LE)
                sense[i] = Sense::GE;
            else if (sense[i] == Sense::GE)
                sense[i] = Sense::LE;
        }
    }

    std::vector<std::size_t> slack_col(m, SIZE_MAX), art_col(m, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i)
        if (sense[i] != Sense::EQ) slack_col[i] = ncols++;
    const std::size_t first_artificial = ncols;
    for (std::size_t i = 0; i < m; ++i)
        if (sense[i] != Sense::LE) art_col[i] = ncols++;

    Tableau tab;
    tab.ncols = ncols;
    tab.first_artificial = first_artificial;
    tab.t.assign(m, std::vector<Scalar>(ncols + 1, Scalar(0)));
    tab.basis.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar v = p.a.at(i, j);
            if (flip[i] < 0) v = -v;
            tab.t[i][col_plus[j]] = v;
            if (col_minus[j] != SIZE_MAX) tab.t[i][col_minus[j]] = -v;
        }
        tab.t[i][ncols] = flip[i] < 0 ? -p.rhs[i] : p.rhs[i];
        if (slack_col[i] != SIZE_MAX)
            tab.t[i][slack_col[i]] = sense[i] == Sense::LE ? Scalar(1) : Scalar(-1);
        if (art_col[i] != SIZE_MAX) {
            tab.t[i][art_col[i]] = Scalar(1);
            tab.basis[i] = art_col[i];
        } else {
            tab.basis[i] = slack_col[i];
        }
    }

    // The column that formed the initial identity in row i, used to read the
    // simplex multipliers off the reduced-cost row.
    std::vector<std::size_t> id_col(m);
    for (std::size_t i = 0; i < m; ++i)
        id_col[i] = sense[i] == Sense::LE ? slack_col[i] : art_col[i];

    LPResult result;

    // Phase 1: minimize the artificial sum.
    bool need_phase1 = false;
    {
        std::vector<Scalar> cost(ncols, Scalar(0));
        for (std::size_t i = 0; i < m; ++i)
            if (art_col[i] != SIZE_MAX) {
                cost[art_col[i]] = Scalar(1);
                need_phase1 = true;
            }
        if (need_phase1) {
            tab.load_costs(cost);
            if (!tab.run(ncols)) throw std::logic_error("phase-1 unbounded");
            const Scalar w = -tab.red[ncols];
            if (w.sign() > 0) {
                // Farkas ray from the phase-1 multipliers.
                result.status = LPStatus::Infeasible;
                result.farkas.assign(m, Scalar(0));
                for (std::size_t i = 0; i < m; ++i) {
                    const Scalar cost_id =
                        id_col[i] >= first_artificial ? Scalar(1) : Scalar(0);
                    Scalar y = cost_id - tab.red[id_col[i]];
                    Scalar f = -y;  // certifies sum >= 0 on columns, < 0 on rhs
                    result.farkas[i] = flip[i] < 0 ? -f : f;
                }
                verify_lp_result(p, result);
                return result;
            }
            // Drive remaining artificials out of the basis.
            for (std::size_t i = 0; i < m; ++i) {
                if (tab.basis[i] < first_artificial) continue;
                std::size_t col = ncols;
                for (std::size_t j = 0; j < first_artificial; ++j) {
                    if (!tab.t[i][j].is_zero()) {
                        col = j;
                        break;
                    }
                }
                if (col < ncols) tab.pivot(i, col);
                // Otherwise the row is redundant; the artificial stays basic
                // at value zero and never leaves.
            }
        }
    }

    // Phase 2: minimize -c_work over the feasible region.
    {
        std::vector<Scalar> cost(ncols, Scalar(0));
        for (std::size_t j = 0; j < n; ++j) {
            cost[col_plus[j]] = -c_work[j];
            if (col_minus[j] != SIZE_MAX) cost[col_minus[j]] = c_work[j];
        }
        tab.load_costs(cost);
        if (!tab.run(first_artificial)) {
            result.status = LPStatus::Unbounded;
            verify_lp_result(p, result);
            return result;
        }
    }

    result.status = LPStatus::Optimal;
    std::vector<Scalar> xs(ncols, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) xs[tab.basis[i]] = tab.t[i][ncols];
    result.primal.assign(n, Scalar(0));
    for (std::size_t j = 0; j < n; ++j) {
        result.primal[j] = xs[col_plus[j]];
        if (col_minus[j] != SIZE_MAX) result.primal[j] -= xs[col_minus[j]];
    }
    result.value = Scalar(0);
    for (std::size_t j = 0; j < n; ++j) result.value += p.objective[j] * result.primal[j];

    // Multipliers of the phase-2 minimization; the maximization dual is their
    // negation, and a minimization input flips the sign back.
    result.dual.assign(m, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
        Scalar y_min = -tab.red[id_col[i]];  // artificials cost zero in phase 2
        Scalar y = p.maximize ? -y_min : y_min;
        result.dual[i] = flip[i] < 0 ? -y : y;
    }
    verify_lp_result(p, result);
    return result;
}

void verify_lp_result(const LPProblem& p, const LPResult& r) {
    const std::size_t n = p.num_vars();
    const std::size_t m = p.num_rows();
    auto is_free = [&](std::size_t j) { return !p.free_var.empty() && p.free_var[j]; };
    auto fail = [](const std::string& what) { throw std::logic_error("LP certificate: " + what); };

    if (r.status == LPStatus::Optimal) {
        if (r.primal.size() != n || r.dual.size() != m) fail("certificate size");
        for (std::size_t j = 0; j < n; ++j)
            if (!is_free(j) && r.primal[j].sign() < 0) fail("negative variable");
        Scalar obj(0);
        for (std::size_t j = 0; j < n; ++j) obj += p.objective[j] * r.primal[j];
        if (obj != r.value) fail("objective mismatch");
        for (std::size_t i = 0; i < m; ++i) {
            Scalar lhs(0);
            for (std::size_t j = 0; j < n; ++j) lhs += p.a.at(i, j) * r.primal[j];
            const int c = (lhs - p.rhs[i]).sign();
            if (p.sense[i] == Sense::LE && c > 0) fail("primal row violated");
            if (p.sense[i] == Sense::GE && c < 0) fail("primal row violated");
            if (p.sense[i] == Sense::EQ && c != 0) fail("primal row violated");
        }
        Scalar dual_obj(0);
        for (std::size_t i = 0; i < m; ++i) dual_obj += r.dual[i] * p.rhs[i];
        if (dual_obj != r.value) fail("strong duality gap");
        for (std::size_t i = 0; i < m; ++i) {
            const int s = r.dual[i].sign();
            if (p.sense[i] == Sense::LE && (p.maximize ? s < 0 : s > 0)) fail("dual row sign");
            if (p.sense[i] == Sense::GE && (p.maximize ? s > 0 : s < 0)) fail("dual row sign");
        }
        for (std::size_t j = 0; j < n; ++j) {
            Scalar yta(0);
            for (std::size_t i = 0; i < m; ++i) yta += r.dual[i] * p.a.at(i, j);
            const int c = (yta - p.objective[j]).sign();
            if (is_free(j)) {
                if (c != 0) fail("dual equality on free column");
            } else if (p.maximize ? c < 0 : c > 0) {
                fail("dual feasibility on column");
            }
        }
        return;
    }

    if (r.status == LPStatus::Infeasible) {
        if (r.farkas.size() != m) fail("farkas size");
        for (std::size_t i = 0; i < m; ++i) {
            const int s = r.farkas[i].sign();
            if (p.sense[i] == Sense::LE && s < 0) fail("farkas row sign");
            if (p.sense[i] == Sense::GE && s > 0) fail("farkas row sign");
        }
        for (std::size_t j = 0; j < n; ++j) {
            Scalar g(0);
            for (std::size_t i = 0; i < m; ++i) g += r.farkas[i] * p.a.at(i, j);
            if (is_free(j)) {
                if (!g.is_zero()) fail("farkas free column not annihilated");
            } else if (g.sign() < 0) {
                fail("farkas column sign");
            }
        }
        Scalar ytb(0);
        for (std::size_t i = 0; i < m; ++i) ytb += r.farkas[i] * p.rhs[i];
        if (ytb.sign() >= 0) fail("farkas rhs not negative");
        return;
    }
    // Unbounded results carry no certificate beyond the status.
}

}  // namespace momentcone::exactla
