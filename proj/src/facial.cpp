#include "momentcone/facial.hpp"

#include <algorithm>

namespace momentcone::facial {

using decompose::MembershipCertificate;
using exactla::LPProblem;
using exactla::LPResult;
using exactla::LPStatus;
using exactla::Matrix;
using exactla::Sense;

namespace {

void require_member(const FunctionSystem& sys, const GroundSet& x, const MomentSequence& s) {
    if (!decompose::membership(sys, x, s).member)
        throw DomainError("non-member", "sequence is outside the restricted cone");
}

// sup{ c >= 0 : target - c * s_A(x_idx) in cone(X) }; nullopt when unbounded.
std::optional<Scalar> mass_headroom(const Matrix& curve, std::size_t idx,
                                    const std::vector<Scalar>& target) {
    const std::size_t m = curve.rows(), nx = curve.cols();
    LPProblem p;
    p.maximize = true;
    p.objective.assign(nx + 1, Scalar(0));
    p.objective[0] = Scalar(1);
    Matrix a(m, nx + 1);
    for (std::size_t i = 0; i < m; ++i) {
        a.at(i, 0) = curve.at(i, idx);
        for (std::size_t j = 0; j < nx; ++j) a.at(i, j + 1) = curve.at(i, j);
    }
    p.a = std::move(a);
    p.rhs = target;
    p.sense.assign(m, Sense::EQ);
    const LPResult r = exactla::lp_solve(p);
    if (r.status == LPStatus::Unbounded) return std::nullopt;
    if (r.status != LPStatus::Optimal)
        throw std::logic_error("headroom LP must be feasible for a member sequence");
    return r.value;
}

struct LevelLP {
    const Matrix* curve = nullptr;           // columns s_A(y) for all of X
    std::vector<std::size_t> positivity;     // indices with p(y) >= 0, also normalized
    std::vector<std::vector<Scalar>> equalities;  // rows t with <t, p> = 0
    std::size_t m = 0;

    LPProblem base(const std::vector<Scalar>& objective) const {
        LPProblem p;
        p.maximize = true;
        p.objective = objective;
        p.free_var.assign(m, true);
        const std::size_t rows = positivity.size() + equalities.size() + 1;
        Matrix a(rows, m);
        std::size_t r = 0;
        for (std::size_t idx : positivity) {
            for (std::size_t j = 0; j < m; ++j) a.at(r, j) = curve->at(j, idx);
            ++r;
        }
        for (const auto& t : equalities) {
            for (std::size_t j = 0; j < m; ++j) a.at(r, j) = t[j];
            ++r;
        }
        for (std::size_t idx : positivity)  // normalization row: sum of values = 1
            for (std::size_t j = 0; j < m; ++j) a.at(r, j) += curve->at(j, idx);
        p.a = std::move(a);
        p.rhs.assign(rows, Scalar(0));
        p.rhs[rows - 1] = Scalar(1);
        p.sense.assign(rows, Sense::EQ);
        for (std::size_t i = 0; i < positivity.size(); ++i) p.sense[i] = Sense::GE;
        return p;
    }

    bool feasible() const {
        return exactla::lp_solve(base(std::vector<Scalar>(m, Scalar(0)))).status ==
               LPStatus::Optimal;
    }

    // max p(x_idx) over the normalized feasible set, with the optimizer.
    std::pair<Scalar, std::vector<Scalar>> max_value_at(std::size_t idx) const {
        std::vector<Scalar> obj(m);
        for (std::size_t j = 0; j < m; ++j) obj[j] = curve->at(j, idx);
        const LPResult r = exactla::lp_solve(base(obj));
        if (r.status != LPStatus::Optimal)
            throw std::logic_error("value LP on a feasible normalized set must attain");
        return {r.value, r.primal};
    }
};

Scalar value_at(const Matrix& curve, const std::vector<Scalar>& coeffs, std::size_t idx) {
    Scalar v(0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) v += coeffs[j] * curve.at(j, idx);
    return v;
}

// Forced-zero scan: indices of `ground` where every feasible functional
// vanishes.  Optimizers witnessing positive values let later points skip
// their LP.  Also returns the averaged representative.
struct ForcedScan {
    std::vector<std::size_t> forced;
    std::vector<Scalar> representative;
    bool all_vanish = false;  // the normalized set was empty
};

ForcedScan forced_zeros(const LevelLP& lp, const std::vector<std::size_t>& ground) {
    ForcedScan out;
    const std::size_t m = lp.m;
    if (!lp.feasible()) {
        out.all_vanish = true;
        out.forced = ground;
        out.representative.assign(m, Scalar(0));
        return out;
    }
    std::vector<std::vector<Scalar>> optimizers;
    std::vector<bool> known_positive(ground.size(), false);
    for (std::size_t i = 0; i < ground.size(); ++i) {
        if (known_positive[i]) continue;
        auto [val, p] = lp.max_value_at(ground[i]);
        if (val.is_zero()) {
            out.forced.push_back(ground[i]);
        } else {
            for (std::size_t j = i; j < ground.size(); ++j)
                if (!known_positive[j] && value_at(*lp.curve, p, ground[j]).sign() > 0)
                    known_positive[j] = true;
        }
        optimizers.push_back(std::move(p));
    }
    out.representative.assign(m, Scalar(0));
    const Scalar inv(mpq_class(1, static_cast<long>(optimizers.size())));
    for (const auto& p : optimizers)
        for (std::size_t j = 0; j < m; ++j) out.representative[j] += inv * p[j];
    return out;
}

std::vector<std::vector<Scalar>> tangency_rows(const FunctionSystem& sys, const GroundSet& x,
                                               const std::vector<std::size_t>& at) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t idx : at) {
        const Matrix d = partials(sys, x[idx]);
        for (std::size_t j = 0; j < d.cols(); ++j) rows.push_back(d.column(j));
    }
    return rows;
}

// One V-set level: positivity on `ground`, <p, functional> = 0.  When
// `refine` is set, tangency conditions are added at forced zeros until the
// forced set stabilizes.
ForcedScan v_level(const FunctionSystem& sys, const GroundSet& x, const Matrix& curve,
                   const std::vector<Scalar>& functional,
                   const std::vector<std::size_t>& ground, bool refine) {
    LevelLP lp;
    lp.curve = &curve;
    lp.positivity = ground;
    lp.m = sys.size();
    lp.equalities.push_back(functional);
    ForcedScan scan = forced_zeros(lp, ground);
    if (!refine) return scan;
    std::vector<std::size_t> pinned;
    while (!scan.all_vanish && scan.forced != pinned) {
        pinned = scan.forced;
        lp.equalities.resize(1);
        for (auto& row : tangency_rows(sys, x, pinned)) lp.equalities.push_back(std::move(row));
        ForcedScan next = forced_zeros(lp, ground);
        if (next.forced == pinned && !next.all_vanish) return next;
        scan = std::move(next);
    }
    return scan;
}

}  // namespace

IndexSet atom_set(const FunctionSystem& sys, const GroundSet& x, const MomentSequence& s) {
    require_member(sys, x, s);
    const Matrix curve = x.curve_matrix(sys);
    IndexSet w;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto headroom = mass_headroom(curve, i, s.values);
        if (!headroom || headroom->sign() > 0) w.push_back(i);
    }
    return w;
}

VSetResult v_set(const FunctionSystem& sys, const GroundSet& x, const MomentSequence& s,
                 std::optional<bool> first_order) {
    require_member(sys, x, s);
    const bool refine = first_order.value_or(sys.differentiable()) && sys.differentiable();
    const Matrix curve = x.curve_matrix(sys);
    std::vector<std::size_t> ground(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) ground[i] = i;
    ForcedScan scan = v_level(sys, x, curve, s.values, ground, refine);
    VSetResult out;
    out.v = scan.forced;
    out.representative = scan.representative;
    // Representative invariants, checked exactly.
    if (s.riesz(out.representative) != Scalar(0))
        throw std::logic_error("representative does not annihilate the sequence");
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int sign = value_at(curve, out.representative, i).sign();
        if (sign < 0) throw std::logic_error("representative negative on the ground set");
        const bool in_v = std::binary_search(out.v.begin(), out.v.end(), i);
        if (in_v != (sign == 0))
            throw std::logic_error("representative zero set disagrees with V");
    }
    return out;
}

CoreVarietyResult core_variety(const FunctionSystem& sys, const GroundSet& x,
                               const std::vector<Scalar>& functional) {
    if (functional.size() != sys.size())
        throw DomainError("bad-parameters", "functional length mismatch");
    const Matrix curve = x.curve_matrix(sys);
    std::vector<std::size_t> prev(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) prev[i] = i;

    CoreVarietyResult out;
    bool ambient_level = true;
    for (;;) {
        ForcedScan scan =
            v_level(sys, x, curve, functional, prev, ambient_level && sys.differentiable());
        IndexSet current = scan.all_vanish ? prev : scan.forced;
        out.trace.push_back(current);
        if (current.empty()) break;
        if (!ambient_level && current == prev) break;
        prev = std::move(current);
        ambient_level = false;
    }
    out.core = out.trace.back();
    out.iterations = out.trace.size() > 1 ? out.trace.size() - 1 : out.trace.size();
    return out;
}

std::size_t face_dimension(const FunctionSystem& sys, const std::vector<Point>& support) {
    if (support.empty()) throw DomainError("empty-support", "face of an empty support");
    std::vector<std::vector<Scalar>> cols;
    cols.reserve(support.size());
    for (const auto& p : support) cols.push_back(moment_curve(sys, p));
    return exactla::rank(Matrix::from_columns(cols));
}

GammaSpace gamma_space(const FunctionSystem& sys, const std::vector<Point>& support) {
    if (support.empty()) throw DomainError("empty-support", "gamma space of an empty support");
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(support.size());
    for (const auto& p : support) rows.push_back(moment_curve(sys, p));
    GammaSpace g;
    g.basis_vectors = exactla::kernel(Matrix::from_rows(rows));
    g.dim = g.basis_vectors.size();
    if (g.dim + face_dimension(sys, support) != sys.size())
        throw std::logic_error("gamma dimension must complement the face dimension");
    return g;
}

FaceReport face_report(const FunctionSystem& sys, const GroundSet& x,
                       const MomentSequence& s) {
    FaceReport rep;
    rep.w = atom_set(sys, x, s);
    VSetResult v = v_set(sys, x, s);
    rep.v = v.v;
    rep.representative = std::move(v.representative);
    if (!std::includes(rep.v.begin(), rep.v.end(), rep.w.begin(), rep.w.end()))
        throw std::logic_error("W(s) must be contained in V(s)");
    if (rep.w.empty()) {
        rep.face_dim = 0;
        rep.gamma_dim = sys.size();
    } else {
        std::vector<Point> support;
        for (std::size_t i : rep.w) support.push_back(x[i]);
        rep.face_dim = face_dimension(sys, support);
        rep.gamma_dim = gamma_space(sys, support).dim;
    }
    return rep;
}

MaxMassReport max_mass(const FunctionSystem& sys, const GroundSet& x,
                       const MomentSequence& s, const Point& at) {
    const auto idx = x.find(at);
    if (!idx) throw DomainError("point-outside-ground", "mass point must lie in the ground set");
    const std::size_t m = sys.size();
    const Matrix curve = x.curve_matrix(sys);

    // Pointedness witness e in lin A with e >= 1 on X.
    {
        LPProblem p;
        p.maximize = true;
        p.objective.assign(m, Scalar(0));
        p.free_var.assign(m, true);
        p.a = curve.transposed();
        p.rhs.assign(x.size(), Scalar(1));
        p.sense.assign(x.size(), Sense::GE);
        if (exactla::lp_solve(p).status != LPStatus::Optimal)
            throw DomainError("unpointed", "no positive functional on the ground set");
    }
    require_member(sys, x, s);

    MaxMassReport rep;
    const auto headroom = mass_headroom(curve, *idx, s.values);
    if (!headroom) throw std::logic_error("pointed cone admits no unbounded mass");
    rep.rho = *headroom;

    // Independent dual route: minimize <p, s> with p >= 0 on X, p(x) = 1.
    {
        LPProblem p;
        p.maximize = false;
        p.objective = s.values;
        p.free_var.assign(m, true);
        const std::size_t rows = x.size() + 1;
        Matrix a(rows, m);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < m; ++j) a.at(i, j) = curve.at(j, i);
        for (std::size_t j = 0; j < m; ++j) a.at(x.size(), j) = curve.at(j, *idx);
        p.a = std::move(a);
        p.rhs.assign(rows, Scalar(0));
        p.rhs[x.size()] = Scalar(1);
        p.sense.assign(rows, Sense::GE);
        p.sense[x.size()] = Sense::EQ;
        const LPResult r = exactla::lp_solve(p);
        if (r.status != LPStatus::Optimal)
            throw std::logic_error("dual mass LP must attain on a pointed finite cone");
        rep.kappa = r.value;
        rep.dual_optimizer = r.primal;
    }
    if (rep.rho != rep.kappa)
        throw std::logic_error("primal and dual maximal-mass values disagree");
    rep.attained = true;

    rep.residual.values.assign(m, Scalar(0));
    const auto cx = moment_curve(sys, at);
    for (std::size_t j = 0; j < m; ++j)
        rep.residual.values[j] = s.values[j] - rep.rho * cx[j];
    rep.residual.system = s.system;

    if (!decompose::membership(sys, x, rep.residual).member)
        throw std::logic_error("maximal-mass residual must stay in the cone");
    const auto residual_headroom = mass_headroom(curve, *idx, rep.residual.values);
    rep.x_outside_w_residual = residual_headroom && residual_headroom->is_zero();

    // Plain restricted V of the residual at the single point x.
    {
        LevelLP lp;
        lp.curve = &curve;
        lp.m = m;
        lp.positivity.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) lp.positivity[i] = i;
        lp.equalities.push_back(rep.residual.values);
        rep.x_outside_v_residual =
            lp.feasible() && lp.max_value_at(*idx).first.sign() > 0;
    }
    return rep;
}

PspResult psp_check(const FunctionSystem& sys, const GroundSet& x,
                    const std::vector<Point>& points, bool first_order) {
    const std::size_t m = sys.size();
    std::vector<std::size_t> idx;
    for (const auto& pt : points) {
        const auto found = x.find(pt);
        if (!found) throw DomainError("point-outside-ground", "separation points must lie in X");
        idx.push_back(*found);
    }
    const Matrix curve = x.curve_matrix(sys);
    const bool refine = first_order && sys.differentiable();

    PspResult out;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        std::vector<std::size_t> zeros;
        for (std::size_t j = 0; j < idx.size(); ++j)
            if (j != i) zeros.push_back(idx[j]);

        LPProblem p;
        p.maximize = true;
        p.objective.assign(m, Scalar(0));
        p.free_var.assign(m, true);
        std::vector<std::vector<Scalar>> eq_rows;
        eq_rows.push_back(curve.column(idx[i]));  // p(x_i) = 1
        for (std::size_t z : zeros) eq_rows.push_back(curve.column(z));
        if (refine)
            for (auto& row : tangency_rows(sys, x, zeros)) eq_rows.push_back(std::move(row));
        const std::size_t rows = x.size() + eq_rows.size();
        Matrix a(rows, m);
        for (std::size_t r = 0; r < x.size(); ++r)
            for (std::size_t j = 0; j < m; ++j) a.at(r, j) = curve.at(j, r);
        for (std::size_t r = 0; r < eq_rows.size(); ++r)
            for (std::size_t j = 0; j < m; ++j) a.at(x.size() + r, j) = eq_rows[r][j];
        p.a = std::move(a);
        p.rhs.assign(rows, Scalar(0));
        p.rhs[x.size()] = Scalar(1);
        p.sense.assign(rows, Sense::GE);
        for (std::size_t r = 0; r < eq_rows.size(); ++r) p.sense[x.size() + r] = Sense::EQ;

        const LPResult r = exactla::lp_solve(p);
        if (r.status == LPStatus::Infeasible) {
            out.feasible = false;
            out.failing_index = i;
            out.farkas = r.farkas;
            out.functionals.clear();
            return out;
        }
        if (r.status != LPStatus::Optimal)
            throw std::logic_error("separation LP cannot be unbounded with objective zero");
        // delta pattern re-checked exactly
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const Scalar v = value_at(curve, r.primal, idx[j]);
            if (v != (j == i ? Scalar(1) : Scalar(0)))
                throw std::logic_error("separation functional misses the delta pattern");
        }
        out.functionals.push_back(r.primal);
    }
    out.feasible = true;
    return out;
}

}  // namespace momentcone::facial
