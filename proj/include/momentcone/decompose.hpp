#pragma once

#include <optional>
#include <vector>

#include "momentcone/lp.hpp"
#include "momentcone/momentmap.hpp"

namespace momentcone::decompose {

using basis::DomainError;
using basis::FunctionSystem;
using basis::Point;
using exactla::Matrix;
using exactla::Scalar;
using momentmap::AtomicMeasure;
using momentmap::MomentSequence;

/// Finite ground set: ordered points in one chart, deduplicated after
/// projective normalization.
class GroundSet {
public:
    explicit GroundSet(std::vector<Point> points);

    const std::vector<Point>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }

    /// Index of an exactly equal point, if present.
    std::optional<std::size_t> find(const Point& x) const;

    /// Columns s_A(x) for all points, as an m x |X| matrix.
    Matrix curve_matrix(const FunctionSystem& sys) const;

private:
    std::vector<Point> pts_;
};

struct MembershipCertificate {
    bool member = false;
    /// member: measure supported on the ground set with exactly the target
    /// moments and at most m atoms.
    std::optional<AtomicMeasure> measure;
    /// non-member: coefficients of p in lin A with p >= 0 on the ground set
    /// and <p, s> < 0.
    std::vector<Scalar> separator;
};

/// Constructive reduction to at most rank{s_A(x_i)} atoms: while the curve
/// points of the support are dependent, walk masses along a kernel direction
/// until one hits zero.  Moments are preserved exactly.
AtomicMeasure reduce(const FunctionSystem& sys, const AtomicMeasure& mu);

/// Signed representation on at most m ground-set points chosen by a
/// rank-greedy scan.  Throws span-deficient when the ground set spans a
/// proper subspace.
AtomicMeasure signed_decompose(const FunctionSystem& sys, const MomentSequence& s,
                               const GroundSet& x);

/// Exact feasibility of s in cone{ s_A(x) : x in X }, certified either way.
MembershipCertificate membership(const FunctionSystem& sys, const GroundSet& x,
                                 const MomentSequence& s);

/// Smallest k such that some k-subset of X supports s; subsets enumerated in
/// colex order per size.  Requires membership and |X| <= max_ground.
std::size_t min_atoms(const FunctionSystem& sys, const GroundSet& x,
                      const MomentSequence& s, std::size_t max_ground = 25);

/// Caratheodory number of the X-restricted cone: the dimension of
/// span{ s_A(x) : x in X }.
std::size_t cara_countable(const FunctionSystem& sys, const GroundSet& x);

}  // namespace momentcone::decompose
