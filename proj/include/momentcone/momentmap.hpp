#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "momentcone/basis.hpp"

namespace momentcone::momentmap {

using basis::Chart;
using basis::DomainError;
using basis::FunctionSystem;
using basis::Point;
using exactla::Matrix;
using exactla::Scalar;

struct Atom {
    Scalar mass;
    Point point;
};

/// Finite atomic measure.  Construction merges duplicate atoms (projective
/// points compare by normal form), drops exact-zero masses, and rejects
/// nonpositive masses unless the measure is flagged signed.
class AtomicMeasure {
public:
    explicit AtomicMeasure(std::vector<Atom> atoms, bool is_signed = false);
    static AtomicMeasure dirac(Scalar mass, Point x) {
        return AtomicMeasure({Atom{std::move(mass), std::move(x)}});
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool is_signed() const { return signed_; }

private:
    std::vector<Atom> atoms_;
    bool signed_ = false;
};

struct MomentSequence {
    std::vector<Scalar> values;
    std::shared_ptr<const FunctionSystem> system;  // optional binding

    /// Riesz functional on coefficient vectors: L_s(p) = <coeffs, values>.
    Scalar riesz(const std::vector<Scalar>& coeffs) const;
};

/// S_{k,A}(C,X) = sum_i c_i s_A(x_i), exactly.
MomentSequence moments(const FunctionSystem& sys, const AtomicMeasure& mu);

/// Total derivative DS_{k,A}(C,X), m x k(n+1).  Affine atoms contribute the
/// curve column followed by the n scaled coordinate partials; projective
/// atoms contribute the n+1 scaled homogeneous partials (the curve column is
/// in their span by the Euler identity).
Matrix jacobian(const FunctionSystem& sys, const AtomicMeasure& mu);

enum class Regularity { Regular, Singular };

/// Regular iff rank DS = m.
Regularity classify(const FunctionSystem& sys, const AtomicMeasure& mu);

struct NAEstimate {
    std::size_t k = 0;
    AtomicMeasure witness;
};

/// Randomized search for the smallest k whose moment-map derivative reaches
/// full rank m: unit masses, integer points uniform in [-50,50], duplicates
/// rejected, `max_trials` samples per k.  The witness certifies the upper
/// bound; failures below k are probabilistic evidence only.  Values of k with
/// k(n+1) < m are skipped outright since the column count already caps the
/// rank.
NAEstimate estimate_na(const FunctionSystem& sys, std::uint64_t seed, int max_trials = 25);

/// Closed form for full monomial systems, including the five exceptional
/// cases (d = 2; (4,3); (2,4); (3,4); (4,4)).
std::size_t na_formula(int n, int d);

}  // namespace momentcone::momentmap
