#pragma once

#include <string>
#include <vector>

#include "momentcone/basis.hpp"

namespace momentcone::catalog {

using basis::FunctionSystem;
using basis::Point;
using exactla::Scalar;

/// Polynomial in lin A with a declared finite zero set.  Construction checks
/// exact vanishing at every declared zero.
struct NamedPolynomial {
    std::string name;
    FunctionSystem system;
    std::vector<Scalar> coefficients;
    std::vector<Point> zeros;

    Scalar eval(const Point& x) const;
    /// Samples `count` random points of the natural domain and checks the
    /// value sign there (a sanity check, not a certificate).
    bool nonnegative_on_samples(std::uint64_t seed, int count) const;
};

/// The degree-10 ternary form with exactly 30 projective zeros, over the
/// graded-lex basis of the degree-10 forms in three variables, together with
/// its zero list in the documented order.  Coordinates live in Q(sqrt2).
NamedPolynomial harris();

/// Ranks of the moment-map derivative at unit masses on the zero prefixes
/// Z_1, ..., Z_30 of the Harris form.
std::vector<std::size_t> table1_ranks();

/// Sum over coordinates of prod_{j=0}^{d-1} (x_i - j)^2; nonnegative on R^n
/// with zero set {0, ..., d-1}^n.
NamedPolynomial frak_p(int n, int d);

/// Sum over coordinates of x_i prod_{j=1}^{d-1} (x_i - j)^2 (d - x_i);
/// nonnegative on [0, d]^n with zero set {0, ..., d}^n.  The boundary
/// factors are applied per coordinate so the declared zero grid comes out as
/// stated.
NamedPolynomial frak_q(int n, int d);

struct TableRow {
    int n = 0, d = 0;
    bool primed = false;
    unsigned long m = 0;       // |A_{n,2d}|
    unsigned long zcount = 0;  // grid size
    std::size_t r = 0;         // rank of the curve points over the grid
    mpq_class w;               // r / m
    mpq_class z;               // r / zcount
};

inline constexpr std::size_t kDefaultTable2Budget = 4096;

/// Face-dimension table cell for the grid zero set of frak_p (or frak_q when
/// primed) under A_{n,2d}.  Grids larger than the budget raise
/// budget-exceeded, mirroring the skipped cells.
TableRow table2(int n, int d, bool primed, std::size_t budget = kDefaultTable2Budget);

/// Closed form (n^2 + n + 2) / 2 for the primed d = 1 column.
unsigned long r_prime_n2(int n);

struct FlatExtensionCounts {
    mpz_class matrix_size;  // C(d+n, n)
    mpz_class lower_added;  // added moments forced by the atom count
    mpz_class upper_added;
};

/// Counting bounds for extending degree-2d moment data until a square moment
/// matrix can host `atoms` atoms (size at least atoms + 1).
FlatExtensionCounts flat_extension_counts(int n, int d, const mpz_class& atoms);

/// ceil(dim lin A^2 / |A|), with A^2 deduplicated on exponent sums.
std::size_t pythagoras_lower(const FunctionSystem& sys);

/// The explicit degree-6 ternary monomial order used by the documented
/// kernel vector of the ten-point example.
std::vector<basis::ExponentVector> b26_listing_order();

struct ExampleSystem {
    std::string name;
    FunctionSystem system;
    std::vector<Point> points;
    std::size_t jacobian_rank = 0;       // at unit masses on the points
    std::vector<Scalar> kernel_vector;   // normalized kernel of DS^T, when 1-dim
};

/// The four reference systems distinguishing "C = N" from "regular iff
/// interior": the full univariate basis, the gapped quintic/sextic list, the
/// four-term sextic list, and the degree-6 ternary forms with ten projective
/// points.  Artifacts are recomputed, not stored.
std::vector<ExampleSystem> example_systems();

enum class Space { Line, Rn, PlaneOdd, Projective, Cube };

struct CaraBound {
    std::string label;
    bool is_upper = false;
    mpq_class value;
};

/// Documented Caratheodory bounds: lookups and closed forms only; the only
/// computation is the grid-rank lower bound, and only within the table
/// budget.
std::vector<CaraBound> cara_bounds(int n, int d, Space space,
                                   std::size_t budget = kDefaultTable2Budget);

}  // namespace momentcone::catalog
