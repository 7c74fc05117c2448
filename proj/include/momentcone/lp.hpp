#pragma once

#include <vector>

#include "momentcone/matrix.hpp"
#include "momentcone/scalar.hpp"

namespace momentcone::exactla {

enum class Sense { LE, EQ, GE };
enum class LPStatus { Optimal, Infeasible, Unbounded };

/// Linear program over Q(sqrt 2):
///   optimize objective . x  subject to  a x {<=,=,>=} rhs,
/// with each variable either nonnegative (default) or free.
struct LPProblem {
    bool maximize = true;
    std::vector<Scalar> objective;
    Matrix a;
    std::vector<Scalar> rhs;
    std::vector<Sense> sense;
    std::vector<bool> free_var;  // empty means all nonnegative

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_rows() const { return rhs.size(); }
};

/// Every result is certified before being returned:
///  - Optimal carries an exact primal solution and an exact dual vector with
///    equal objective values;
///  - Infeasible carries a Farkas ray;
///  - Unbounded carries the last feasible point visited.
struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Scalar value;
    std::vector<Scalar> primal;
    std::vector<Scalar> dual;    // per constraint, Optimal only
    std::vector<Scalar> farkas;  // per constraint, Infeasible only
};

/// Two-phase primal simplex with Bland's anti-cycling rule, all pivots exact.
LPResult lp_solve(const LPProblem& p);

/// Re-checks a result against the problem by exact substitution.  Throws
/// std::logic_error with a description on any violated condition.  lp_solve
/// calls this on every result before returning it.
void verify_lp_result(const LPProblem& p, const LPResult& r);

}  // namespace momentcone::exactla
