#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "momentcone/matrix.hpp"
#include "momentcone/scalar.hpp"

namespace momentcone::basis {

using exactla::Matrix;
using exactla::Scalar;

/// Domain errors (chart mismatch, missing derivatives, non-member inputs,
/// ...) that map to CLI exit code 1.  `kind` is a stable machine-readable
/// tag.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

enum class Chart { Affine, Projective };

struct ExponentVector {
    std::vector<int> e;

    int total() const {
        int t = 0;
        for (int v : e) t += v;
        return t;
    }
    bool operator==(const ExponentVector& o) const { return e == o.e; }
};

/// Graded lexicographic order: lower total degree first, then exponent tuples
/// in descending lexicographic order (so x1^2 precedes x1 x2 precedes x2^2).
bool grlex_less(const ExponentVector& a, const ExponentVector& b);

/// Affine coordinate vector, or a normalized projective representative whose
/// first nonzero coordinate is 1.
class Point {
public:
    static Point affine(std::vector<Scalar> coords);
    static Point projective(std::vector<Scalar> coords);

    Chart chart() const { return chart_; }
    std::size_t dim() const { return coords_.size(); }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool operator==(const Point& o) const {
        return chart_ == o.chart_ && coords_ == o.coords_;
    }
    bool operator!=(const Point& o) const { return !(*this == o); }

    std::string str() const;

private:
    Point(Chart chart, std::vector<Scalar> coords)
        : chart_(chart), coords_(std::move(coords)) {}
    Chart chart_;
    std::vector<Scalar> coords_;
};

enum class SystemKind { AffineMonomial, ProjectiveMonomial, Gapped1D, Custom };

using Evaluator = std::function<Scalar(const Point&)>;
using DerivativeEvaluator = std::function<std::vector<Scalar>(const Point&)>;
using DomainPredicate = std::function<bool(const Point&)>;

/// Ordered list A = {a_1, ..., a_m} of evaluable functions with optional
/// exact partial derivatives.  Immutable after construction.
class FunctionSystem {
public:
    FunctionSystem() = default;  // empty placeholder; factories build real systems

    static FunctionSystem affine_monomials(int n, int d);
    static FunctionSystem projective_monomials(int n, int d);
    /// Projective system with an explicit monomial ordering (all |alpha| = d).
    static FunctionSystem projective_ordered(int n, int d,
                                             std::vector<ExponentVector> order,
                                             std::string order_tag);
    static FunctionSystem gapped(std::vector<int> exponents);
    static FunctionSystem custom(Chart chart, int point_dim,
                                 std::vector<Evaluator> funcs,
                                 std::vector<DerivativeEvaluator> derivs = {},
                                 DomainPredicate domain = {});

    SystemKind kind() const { return kind_; }
    Chart chart() const { return chart_; }
    std::size_t size() const { return m_; }
    /// Number of coordinates of a point (affine n, projective n+1).
    int point_dim() const { return point_dim_; }
    /// Ambient dimension n (projective systems live on P^n).
    int ambient_n() const { return chart_ == Chart::Affine ? point_dim_ : point_dim_ - 1; }
    int degree() const { return d_; }
    bool differentiable() const { return differentiable_; }
    const std::vector<ExponentVector>& exponents() const { return exps_; }
    const std::string& order_tag() const { return order_tag_; }

    bool in_domain(const Point& x) const { return !domain_ || domain_(x); }

    friend std::vector<Scalar> moment_curve(const FunctionSystem&, const Point&);
    friend Matrix partials(const FunctionSystem&, const Point&);

private:
    SystemKind kind_ = SystemKind::Custom;
    Chart chart_ = Chart::Affine;
    int point_dim_ = 0;
    int d_ = -1;
    std::size_t m_ = 0;
    bool differentiable_ = false;
    std::vector<ExponentVector> exps_;
    std::vector<Evaluator> funcs_;
    std::vector<DerivativeEvaluator> derivs_;
    DomainPredicate domain_;
    std::string order_tag_ = "grlex";
};

/// s_A(x): exact componentwise evaluation.  Projective points are evaluated
/// at their normalized representative.
std::vector<Scalar> moment_curve(const FunctionSystem& sys, const Point& x);

/// Evaluation at a raw coordinate vector, without projective normalization.
/// Only available for monomial kinds.
std::vector<Scalar> evaluate_at_coords(const FunctionSystem& sys,
                                       const std::vector<Scalar>& coords);

/// m x point_dim matrix of partial derivatives; projective systems are
/// differentiated in all n+1 homogeneous coordinates.
Matrix partials(const FunctionSystem& sys, const Point& x);

/// Checks assumption (*): the functions are linearly independent, by taking
/// rank of the evaluation matrix at m random integer points.  Retries up to
/// three batches before giving up.
bool validate_independence(const FunctionSystem& sys, std::uint64_t seed);

}  // namespace momentcone::basis
