#include "momentcone/decompose.hpp"

#include <algorithm>

namespace momentcone::decompose {

using exactla::LPProblem;
using exactla::LPResult;
using exactla::LPStatus;
using exactla::Sense;
using momentmap::Atom;

GroundSet::GroundSet(std::vector<Point> points) {
    if (points.empty()) throw DomainError("empty-ground-set", "ground set must be nonempty");
    const auto chart = points.front().chart();
    const auto dim = points.front().dim();
    for (auto& p : points) {
        if (p.chart() != chart || p.dim() != dim)
            throw DomainError("chart-mismatch", "ground set mixes charts");
        if (std::find(pts_.begin(), pts_.end(), p) == pts_.end()) pts_.push_back(std::move(p));
    }
}

std::optional<std::size_t> GroundSet::find(const Point& x) const {
    for (std::size_t i = 0; i < pts_.size(); ++i)
        if (pts_[i] == x) return i;
    return std::nullopt;
}

Matrix GroundSet::curve_matrix(const FunctionSystem& sys) const {
    std::vector<std::vector<Scalar>> cols;
    cols.reserve(pts_.size());
    for (const auto& p : pts_) cols.push_back(moment_curve(sys, p));
    return Matrix::from_columns(cols);
}

AtomicMeasure reduce(const FunctionSystem& sys, const AtomicMeasure& mu) {
    if (mu.is_signed()) throw DomainError("signed-measure", "reduction needs an unsigned measure");
    std::vector<Atom> atoms = mu.atoms();
    for (;;) {
        if (atoms.empty()) return AtomicMeasure({});
        std::vector<std::vector<Scalar>> cols;
        cols.reserve(atoms.size());
        for (const auto& a : atoms) cols.push_back(moment_curve(sys, a.point));
        const auto null_basis = exactla::kernel(Matrix::from_columns(cols));
        if (null_basis.empty()) return AtomicMeasure(atoms);

        const std::vector<Scalar>& w = null_basis.front();
        // Largest step t with masses - t*w >= 0; binding indices have w_i > 0.
        auto step = [&](int sign) -> std::optional<Scalar> {
            std::optional<Scalar> t;
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                const Scalar wi = sign > 0 ? w[i] : -w[i];
                if (wi.sign() <= 0) continue;
                Scalar ratio = atoms[i].mass / wi;
                if (!t || ratio < *t) t = ratio;
            }
            return t;
        };
        const auto t_pos = step(+1), t_neg = step(-1);
        int dir;
        if (t_pos && t_neg)
            dir = *t_pos <= *t_neg ? +1 : -1;  // prefer the smaller step
        else
            dir = t_pos ? +1 : -1;
        const Scalar t = dir > 0 ? *t_pos : *t_neg;

        std::vector<Atom> next;
        next.reserve(atoms.size() - 1);
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            const Scalar wi = dir > 0 ? w[i] : -w[i];
            Scalar mass = atoms[i].mass - t * wi;
            if (mass.is_zero()) continue;
            if (mass.sign() < 0) throw std::logic_error("reduction produced a negative mass");
            next.push_back(Atom{std::move(mass), atoms[i].point});
        }
        if (next.size() >= atoms.size())
            throw std::logic_error("reduction step removed no atom");
        atoms = std::move(next);
    }
}

AtomicMeasure signed_decompose(const FunctionSystem& sys, const MomentSequence& s,
                               const GroundSet& x) {
    const std::size_t m = sys.size();
    if (s.values.size() != m) throw DomainError("bad-parameters", "sequence length mismatch");
    // Rank-greedy scan: keep a point whenever it enlarges the span.
    std::vector<std::size_t> chosen;
    std::vector<std::vector<Scalar>> cols;
    std::size_t current_rank = 0;
    for (std::size_t i = 0; i < x.size() && chosen.size() < m; ++i) {
        cols.push_back(moment_curve(sys, x[i]));
        const std::size_t r = exactla::rank(Matrix::from_columns(cols));
        if (r > current_rank) {
            current_rank = r;
            chosen.push_back(i);
        } else {
            cols.pop_back();
        }
    }
    if (chosen.size() < m)
        throw DomainError("span-deficient", "ground set spans a proper subspace");
    const auto masses = exactla::solve(Matrix::from_columns(cols), s.values);
    if (!masses) throw std::logic_error("square system with full rank must be solvable");
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < m; ++i) {
        if ((*masses)[i].is_zero()) continue;
        atoms.push_back(Atom{(*masses)[i], x[chosen[i]]});
    }
    return AtomicMeasure(std::move(atoms), /*is_signed=*/true);
}

MembershipCertificate membership(const FunctionSystem& sys, const GroundSet& x,
                                 const MomentSequence& s) {
    const std::size_t m = sys.size();
    if (s.values.size() != m) throw DomainError("bad-parameters", "sequence length mismatch");
    LPProblem p;
    p.maximize = true;
    p.objective.assign(x.size(), Scalar(0));
    p.a = x.curve_matrix(sys);
    p.rhs = s.values;
    p.sense.assign(m, Sense::EQ);
    const LPResult r = exactla::lp_solve(p);

    MembershipCertificate cert;
    if (r.status == LPStatus::Optimal) {
        cert.member = true;
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!r.primal[i].is_zero()) atoms.push_back(Atom{r.primal[i], x[i]});
        AtomicMeasure reduced = reduce(sys, AtomicMeasure(std::move(atoms)));
        if (momentmap::moments(sys, reduced).values != s.values)
            throw std::logic_error("membership measure fails to reproduce the sequence");
        cert.measure = std::move(reduced);
        return cert;
    }
    if (r.status != LPStatus::Infeasible)
        throw std::logic_error("membership feasibility cannot be unbounded");
    cert.member = false;
    cert.separator = r.farkas;
    // Invariants of the separator, checked exactly.
    for (std::size_t i = 0; i < x.size(); ++i) {
        Scalar val(0);
        const auto cv = moment_curve(sys, x[i]);
        for (std::size_t j = 0; j < m; ++j) val += cert.separator[j] * cv[j];
        if (val.sign() < 0) throw std::logic_error("separator negative on the ground set");
    }
    Scalar pairing(0);
    for (std::size_t j = 0; j < m; ++j) pairing += cert.separator[j] * s.values[j];
    if (pairing.sign() >= 0) throw std::logic_error("separator does not cut the sequence");
    return cert;
}

namespace {

bool subset_feasible(const Matrix& curve, const std::vector<std::size_t>& subset,
                     const std::vector<Scalar>& target) {
    LPProblem p;
    p.maximize = true;
    p.objective.assign(subset.size(), Scalar(0));
    Matrix a(curve.rows(), subset.size());
    for (std::size_t j = 0; j < subset.size(); ++j)
        for (std::size_t i = 0; i < curve.rows(); ++i)
            a.at(i, j) = curve.at(i, subset[j]);
    p.a = std::move(a);
    p.rhs = target;
    p.sense.assign(curve.rows(), exactla::Sense::EQ);
    return exactla::lp_solve(p).status == LPStatus::Optimal;
}

// Colex successor of a k-combination of {0, ..., n-1}; false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t limit = (i + 1 < k) ? c[i + 1] : n;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j) c[j] = j;
            return true;
        }
    }
    return false;
}

}  // namespace

std::size_t min_atoms(const FunctionSystem& sys, const GroundSet& x,
                      const MomentSequence& s, std::size_t max_ground) {
    if (x.size() > max_ground)
        throw DomainError("ground-too-large", "min_atoms is guarded by the ground-set size");
    bool all_zero = true;
    for (const auto& v : s.values) all_zero = all_zero && v.is_zero();
    if (all_zero) return 0;
    const MembershipCertificate cert = membership(sys, x, s);
    if (!cert.member) throw DomainError("non-member", "sequence is outside the restricted cone");
    const Matrix curve = x.curve_matrix(sys);
    const std::size_t cap = std::min(x.size(), cert.measure->size());
    for (std::size_t k = 1; k <= cap; ++k) {
        std::vector<std::size_t> subset(k);
        for (std::size_t i = 0; i < k; ++i) subset[i] = i;
        do {
            if (subset_feasible(curve, subset, s.values)) return k;
        } while (next_combination(subset, x.size()));
    }
    throw std::logic_error("membership certificate bounds the minimal size");
}

std::size_t cara_countable(const FunctionSystem& sys, const GroundSet& x) {
    return exactla::rank(x.curve_matrix(sys));
}

}  // namespace momentcone::decompose
