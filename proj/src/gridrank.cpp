#include "momentcone/gridrank.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace momentcone::gridrank {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, mpq_class>>;  // sorted by column

// Normal forms of x^a modulo f(x) = prod_{j=0}^{g-1} (x - j), for a up to
// max_exp, as integer coefficient vectors of length g.
std::vector<std::vector<mpz_class>> univariate_normal_forms(int g, int max_exp) {
    // f monic of degree g; x^g reduces to x^g - f.
    std::vector<mpz_class> f{1};  // leading-order build of prod (x - j)
    for (int j = 0; j < g; ++j) {
        std::vector<mpz_class> next(f.size() + 1);
        for (std::size_t i = 0; i < f.size(); ++i) {
            next[i + 1] += f[i];
            next[i] -= j * f[i];
        }
        f = std::move(next);
    }
    std::vector<mpz_class> top(g);  // x^g mod f
    for (int i = 0; i < g; ++i) top[i] = -f[i];

    std::vector<std::vector<mpz_class>> nf(static_cast<std::size_t>(max_exp) + 1,
                                           std::vector<mpz_class>(g));
    for (int a = 0; a <= max_exp && a < g; ++a) nf[a][a] = 1;
    for (int a = g; a <= max_exp; ++a) {
        // shift by x, then fold the overflowing degree-g coefficient
        const auto& prev = nf[a - 1];
        auto& cur = nf[a];
        for (int i = 1; i < g; ++i) cur[i] = prev[i - 1];
        cur[0] = 0;
        const mpz_class& carry = prev[g - 1];
        if (carry != 0)
            for (int i = 0; i < g; ++i) cur[i] += carry * top[i];
    }
    return nf;
}

// Reduces `row` against the pivots and installs it when independent.
bool eliminate(SparseRow row, std::map<std::size_t, SparseRow>& pivots) {
    while (!row.empty()) {
        const auto it = pivots.find(row.front().first);
        if (it == pivots.end()) break;
        const mpq_class factor = row.front().second;  // pivot rows are monic
        SparseRow merged;
        merged.reserve(row.size() + it->second.size());
        std::size_t a = 0, b = 0;
        while (a < row.size() || b < it->second.size()) {
            if (b == it->second.size() ||
                (a < row.size() && row[a].first < it->second[b].first)) {
                merged.push_back(row[a++]);
            } else if (a == row.size() || it->second[b].first < row[a].first) {
                merged.emplace_back(it->second[b].first, -factor * it->second[b].second);
                ++b;
            } else {
                mpq_class c = row[a].second - factor * it->second[b].second;
                if (c != 0) merged.emplace_back(row[a].first, std::move(c));
                ++a;
                ++b;
            }
        }
        row = std::move(merged);
    }
    if (row.empty()) return false;
    const mpq_class lead = row.front().second;
    for (auto& [c, v] : row) v /= lead;
    const std::size_t col = row.front().first;
    pivots.emplace(col, std::move(row));
    return true;
}

}  // namespace

std::size_t grid_rank(const std::vector<basis::ExponentVector>& exps, int n, int g) {
    if (n < 1 || g < 1) throw std::invalid_argument("grid_rank needs n, g >= 1");
    int max_exp = 0;
    for (const auto& a : exps)
        for (int v : a.e) max_exp = std::max(max_exp, v);
    const auto nf = univariate_normal_forms(g, max_exp);

    // Mixed-radix column encoding of grid monomials.
    std::vector<std::size_t> stride(static_cast<std::size_t>(n));
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
        stride[static_cast<std::size_t>(i)] = total;
        total *= static_cast<std::size_t>(g);
    }

    std::vector<SparseRow> rows;
    rows.reserve(exps.size());
    for (const auto& a : exps) {
        if (static_cast<int>(a.e.size()) != n)
            throw std::invalid_argument("exponent arity mismatch");
        SparseRow row{{0, mpq_class(1)}};
        for (int i = 0; i < n; ++i) {
            const int e = a.e[static_cast<std::size_t>(i)];
            if (e < g) {  // single-term factor: shift columns in place
                if (e > 0)
                    for (auto& [c, v] : row)
                        c += static_cast<std::size_t>(e) * stride[static_cast<std::size_t>(i)];
                continue;
            }
            SparseRow next;
            for (const auto& [c, v] : row)
                for (int t = 0; t < g; ++t) {
                    const mpz_class& coef = nf[static_cast<std::size_t>(e)][t];
                    if (coef == 0) continue;
                    next.emplace_back(
                        c + static_cast<std::size_t>(t) * stride[static_cast<std::size_t>(i)],
                        v * mpq_class(coef));
                }
            std::sort(next.begin(), next.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            row = std::move(next);
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(row));
    }

    // Single-term rows first; they pivot immediately and the rest reduce
    // against them cheaply.
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });

    std::map<std::size_t, SparseRow> pivots;
    std::size_t rank = 0;
    for (auto& row : rows)
        if (eliminate(std::move(row), pivots)) ++rank;
    return rank;
}

}  // namespace momentcone::gridrank
