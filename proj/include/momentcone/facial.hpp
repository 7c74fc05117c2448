#pragma once

#include <optional>
#include <vector>

#include "momentcone/decompose.hpp"

namespace momentcone::facial {

using basis::DomainError;
using basis::FunctionSystem;
using basis::Point;
using decompose::GroundSet;
using exactla::Scalar;
using momentmap::MomentSequence;

/// Indices into the ground set, sorted ascending.
using IndexSet = std::vector<std::size_t>;

/// W(s) on X: point x is included iff some representing measure on X puts
/// positive mass at x, decided by the LP sup{ c >= 0 : s - c s_A(x) in
/// cone(X) }.  Requires a member sequence.
IndexSet atom_set(const FunctionSystem& sys, const GroundSet& x, const MomentSequence& s);

struct VSetResult {
    IndexSet v;
    /// Nonnegative on X with <p, s> = 0 and Z(p) cap X = V; the zero vector
    /// when every feasible functional vanishes identically on X.
    std::vector<Scalar> representative;
};

/// V(s) on X via one LP per point: x lies in V iff
///   max{ p(x) : p >= 0 on X, <p,s> = 0, sum_{y in X} p(y) = 1 } = 0.
/// With `first_order` set (the default for differentiable systems) the
/// feasible set is iteratively refined by the exact tangency conditions
/// grad p = 0 at points where every feasible functional vanishes; those
/// conditions hold for every representative that is nonnegative on the whole
/// ambient space, so the refined V reproduces the ambient exposed-face zero
/// set where the plain LP can only see the restricted cone (which, with
/// independent curve points, is simplicial and would force V = W).
VSetResult v_set(const FunctionSystem& sys, const GroundSet& x, const MomentSequence& s,
                 std::optional<bool> first_order = std::nullopt);

struct CoreVarietyResult {
    std::vector<IndexSet> trace;  // V_1, V_2, ... up to the stabilization witness
    IndexSet core;
    std::size_t iterations = 0;  // effective iterations (trace minus the witness)
};

/// Core variety iteration for an arbitrary functional: V_0 = X, then
/// N_k = { p : L(p) = 0, p >= 0 on V_{k-1} } and V_k = common zeros of N_k
/// inside V_{k-1}, until stabilization or the empty set.  The first level
/// stands for positivity on the ambient space and uses the same first-order
/// refinement as v_set; later levels are relative to the finite V_{k-1} and
/// are computed by the plain LP.
CoreVarietyResult core_variety(const FunctionSystem& sys, const GroundSet& x,
                               const std::vector<Scalar>& functional);

/// dim conv cone s_A(support): the rank of the curve-point matrix.
std::size_t face_dimension(const FunctionSystem& sys, const std::vector<Point>& support);

struct GammaSpace {
    std::vector<std::vector<Scalar>> basis_vectors;  // coefficient vectors
    std::size_t dim = 0;
};

/// Gamma_s = { f in lin A : support subset Z(f) }, the kernel of the
/// transposed evaluation matrix; dim Gamma + face dimension = m.
GammaSpace gamma_space(const FunctionSystem& sys, const std::vector<Point>& support);

struct FaceReport {
    IndexSet w;
    IndexSet v;
    std::size_t face_dim = 0;
    std::size_t gamma_dim = 0;
    std::vector<Scalar> representative;
};

/// Bundles W, V, D_s and gamma_s with the invariant checks W subset V,
/// D_s + gamma_s = m, p >= 0 on X, <p,s> = 0.
FaceReport face_report(const FunctionSystem& sys, const GroundSet& x,
                       const MomentSequence& s);

struct MaxMassReport {
    Scalar rho;
    Scalar kappa;
    std::vector<Scalar> dual_optimizer;  // p* with p*(x) = 1, <p*, s> = kappa
    MomentSequence residual;             // s - rho * s_A(x)
    bool attained = false;
    bool x_outside_w_residual = false;
    bool x_outside_v_residual = false;  // against the plain (restricted) V
};

/// Maximal mass of s at x over the X-restricted cone: rho by the primal LP
/// sup{ c : s - c s_A(x) in cone(X) }, kappa by the independent dual LP
/// inf{ <p,s> : p >= 0 on X, p(x) = 1 }.  Requires a member sequence, x in
/// X, and a pointedness witness e in lin A with e >= 1 on X.
MaxMassReport max_mass(const FunctionSystem& sys, const GroundSet& x,
                       const MomentSequence& s, const Point& at);

struct PspResult {
    bool feasible = false;
    std::size_t failing_index = 0;                    // when infeasible
    std::vector<std::vector<Scalar>> functionals;     // p_1..p_k when feasible
    std::vector<Scalar> farkas;                       // certificate when infeasible
};

/// Positive separation property on X: for each i an LP searches for p >= 0
/// on X with p(x_i) = 1 and p(x_j) = 0 for j != i.  With `first_order` the
/// tangency rows grad p(x_j) = 0 are added at the pinned zeros, modelling
/// representatives nonnegative on the ambient space.
PspResult psp_check(const FunctionSystem& sys, const GroundSet& x,
                    const std::vector<Point>& points, bool first_order = false);

}  // namespace momentcone::facial
