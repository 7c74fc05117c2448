#pragma once

#include <vector>

#include "momentcone/basis.hpp"

namespace momentcone::gridrank {

/// Exact rank of the evaluation matrix ( x^alpha )_{x in G, alpha in exps}
/// over the grid G = {0, 1, ..., g-1}^n.
///
/// Evaluation on a product grid factors through reduction modulo the grid
/// ideal: x_i^a is rewritten modulo f(x_i) = prod_j (x_i - j), which is a
/// bijection between functions on G and polynomials with per-variable degree
/// below g.  The rank of the evaluation matrix therefore equals the rank of
/// the (very sparse) normal-form coefficient matrix, which a sparse exact
/// elimination handles at sizes far beyond what dense elimination on the
/// d^n x m evaluation matrix could reach.
std::size_t grid_rank(const std::vector<basis::ExponentVector>& exps, int n, int g);

}  // namespace momentcone::gridrank
