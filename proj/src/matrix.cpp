#include "momentcone/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace momentcone::exactla {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Scalar>>& cols) {
    const std::size_t c = cols.size();
    const std::size_t r = c == 0 ? 0 : cols.front().size();
    Matrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
        if (cols[j].size() != r) throw std::invalid_argument("ragged columns");
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    std::vector<Scalar> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
    std::vector<Scalar> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

namespace {

struct Echelon {
    Matrix m;                             // upper echelon form
    std::vector<std::size_t> pivot_cols;  // one per pivot row, increasing
    int swap_sign = 1;
};

// Fraction-free Bareiss elimination.  Pivot choice within a column: the
// candidate with the smallest bit length, which keeps coefficient growth in
// check on the large evaluation matrices.
Echelon bareiss(Matrix work) {
    const std::size_t rows = work.rows(), cols = work.cols();
    Echelon ech;
    ech.pivot_cols.reserve(std::min(rows, cols));
    Scalar prev_pivot(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (work.at(i, c).is_zero()) continue;
            const std::size_t bits = work.at(i, c).bit_size();
            if (best == rows || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == rows) continue;
        if (best != r) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(work.at(r, j), work.at(best, j));
            ech.swap_sign = -ech.swap_sign;
        }
        const Scalar pivot = work.at(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar factor = work.at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j)
                work.at(i, j) = (work.at(i, j) * pivot - factor * work.at(r, j)) / prev_pivot;
            work.at(i, c) = Scalar(0);
        }
        prev_pivot = pivot;
        ech.pivot_cols.push_back(c);
        ++r;
    }
    ech.m = std::move(work);
    return ech;
}

}  // namespace

std::size_t rank(const Matrix& m) { return bareiss(m).pivot_cols.size(); }

std::vector<Scalar> normalize_primitive(std::vector<Scalar> v) {
    mpz_class den_lcm(1);
    for (const Scalar& s : v) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), s.rat().get_den().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), s.irr().get_den().get_mpz_t());
    }
    mpz_class content(0);
    for (const Scalar& s : v) {
        mpz_class na = s.rat().get_num() * (den_lcm / s.rat().get_den());
        mpz_class nb = s.irr().get_num() * (den_lcm / s.irr().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), na.get_mpz_t());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), nb.get_mpz_t());
    }
    if (content == 0) return v;  // zero vector
    Scalar scale = Scalar(mpq_class(den_lcm, content));
    int lead_sign = 0;
    for (Scalar& s : v) {
        s *= scale;
        if (lead_sign == 0) lead_sign = s.sign();
    }
    if (lead_sign < 0)
        for (Scalar& s : v) s = -s;
    return v;
}

std::vector<std::vector<Scalar>> kernel(const Matrix& m) {
    const std::size_t cols = m.cols();
    Echelon ech = bareiss(m);
    const std::size_t r = ech.pivot_cols.size();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    basis.reserve(cols - r);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[f] = Scalar(1);
        // Back substitution over the field on the echelon rows.
        for (std::size_t k = r; k-- > 0;) {
            const std::size_t pc = ech.pivot_cols[k];
            if (pc > f) continue;
            Scalar sum(0);
            for (std::size_t j = pc + 1; j <= f; ++j) {
                if (v[j].is_zero()) continue;
                sum += ech.m.at(k, j) * v[j];
            }
            v[pc] = -sum / ech.m.at(k, pc);
        }
        basis.push_back(normalize_primitive(std::move(v)));
    }
    return basis;
}

Scalar det(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Scalar(1);
    Echelon ech = bareiss(m);
    if (ech.pivot_cols.size() < n) return Scalar(0);
    // With full column rank the Bareiss recurrence leaves the determinant of
    // the whole matrix as the final pivot.
    Scalar d = ech.m.at(n - 1, n - 1);
    return ech.swap_sign < 0 ? -d : d;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("rhs size mismatch");
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, cols) = b[i];
    }
    Echelon ech = bareiss(aug);
    // A pivot in the augmented column certifies inconsistency.
    if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == cols) return std::nullopt;

    std::vector<Scalar> x(cols, Scalar(0));
    for (std::size_t k = ech.pivot_cols.size(); k-- > 0;) {
        const std::size_t pc = ech.pivot_cols[k];
        Scalar sum = ech.m.at(k, cols);
        for (std::size_t j = pc + 1; j < cols; ++j) {
            if (x[j].is_zero()) continue;
            sum -= ech.m.at(k, j) * x[j];
        }
        x[pc] = sum / ech.m.at(k, pc);
    }
    return x;
}

}  // namespace momentcone::exactla
