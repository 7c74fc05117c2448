#include "momentcone/basis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "momentcone/rng.hpp"

namespace momentcone::basis {

using exactla::Rng;

bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
    const int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.e > b.e;  // lexicographically larger tuple comes first
}

Point Point::affine(std::vector<Scalar> coords) {
    return Point(Chart::Affine, std::move(coords));
}

Point Point::projective(std::vector<Scalar> coords) {
    std::size_t lead = coords.size();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!coords[i].is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead == coords.size())
        throw DomainError("zero-projective-point", "projective point must be nonzero");
    const Scalar inv = coords[lead].inverse();
    for (auto& c : coords) c = c * inv;
    return Point(Chart::Projective, std::move(coords));
}

std::string Point::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i].str();
    }
    os << ")";
    return os.str();
}

namespace {

void enumerate_bounded(int nvars, int bound, bool exact_total,
                       std::vector<ExponentVector>& out) {
    ExponentVector cur;
    cur.e.assign(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == nvars) {
            if (!exact_total || remaining == 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur.e[pos] = v;
            rec(pos + 1, remaining - v);
        }
        cur.e[pos] = 0;
    };
    rec(0, bound);
    std::sort(out.begin(), out.end(), grlex_less);
}

}  // namespace

FunctionSystem FunctionSystem::affine_monomials(int n, int d) {
    if (n < 1 || d < 0) throw DomainError("bad-parameters", "affine system needs n >= 1, d >= 0");
    FunctionSystem sys;
    sys.kind_ = SystemKind::AffineMonomial;
    sys.chart_ = Chart::Affine;
    sys.point_dim_ = n;
    sys.d_ = d;
    sys.differentiable_ = true;
    enumerate_bounded(n, d, /*exact_total=*/false, sys.exps_);
    sys.m_ = sys.exps_.size();
    return sys;
}

FunctionSystem FunctionSystem::projective_monomials(int n, int d) {
    if (n < 1 || d < 0) throw DomainError("bad-parameters", "projective system needs n >= 1, d >= 0");
    FunctionSystem sys;
    sys.kind_ = SystemKind::ProjectiveMonomial;
    sys.chart_ = Chart::Projective;
    sys.point_dim_ = n + 1;
    sys.d_ = d;
    sys.differentiable_ = true;
    enumerate_bounded(n + 1, d, /*exact_total=*/true, sys.exps_);
    sys.m_ = sys.exps_.size();
    return sys;
}

FunctionSystem FunctionSystem::projective_ordered(int n, int d,
                                                  std::vector<ExponentVector> order,
                                                  std::string order_tag) {
    FunctionSystem sys = projective_monomials(n, d);
    if (order.size() != sys.exps_.size())
        throw DomainError("bad-parameters", "ordered exponent list has wrong size");
    std::set<std::vector<int>> seen;
    for (const auto& a : order) {
        if (static_cast<int>(a.e.size()) != n + 1 || a.total() != d)
            throw DomainError("bad-parameters", "exponent vector outside the system");
        if (!seen.insert(a.e).second)
            throw DomainError("duplicate-exponent", "duplicate exponent vector");
    }
    sys.exps_ = std::move(order);
    sys.order_tag_ = std::move(order_tag);
    return sys;
}

FunctionSystem FunctionSystem::gapped(std::vector<int> exponents) {
    if (exponents.empty()) throw DomainError("empty-system", "empty function list");
    std::set<int> seen;
    for (int e : exponents) {
        if (e < 0) throw DomainError("bad-parameters", "negative exponent");
        if (!seen.insert(e).second) throw DomainError("duplicate-exponent", "duplicate exponent");
    }
    FunctionSystem sys;
    sys.kind_ = SystemKind::Gapped1D;
    sys.chart_ = Chart::Affine;
    sys.point_dim_ = 1;
    sys.differentiable_ = true;
    std::sort(exponents.begin(), exponents.end());
    sys.d_ = exponents.back();
    for (int e : exponents) sys.exps_.push_back(ExponentVector{{e}});
    sys.m_ = sys.exps_.size();
    return sys;
}

FunctionSystem FunctionSystem::custom(Chart chart, int point_dim,
                                      std::vector<Evaluator> funcs,
                                      std::vector<DerivativeEvaluator> derivs,
                                      DomainPredicate domain) {
    if (funcs.empty()) throw DomainError("empty-system", "empty function list");
    if (!derivs.empty() && derivs.size() != funcs.size())
        throw DomainError("bad-parameters", "derivative list size mismatch");
    FunctionSystem sys;
    sys.kind_ = SystemKind::Custom;
    sys.chart_ = chart;
    sys.point_dim_ = point_dim;
    sys.m_ = funcs.size();
    sys.funcs_ = std::move(funcs);
    sys.derivs_ = std::move(derivs);
    sys.domain_ = std::move(domain);
    sys.differentiable_ = !sys.derivs_.empty();
    sys.order_tag_ = "custom";
    return sys;
}

namespace {

Scalar eval_monomial(const ExponentVector& a, const std::vector<Scalar>& coords) {
    Scalar v(1);
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] == 0) continue;
        v *= coords[i].pow(static_cast<unsigned long>(a.e[i]));
    }
    return v;
}

void check_point(const FunctionSystem& sys, const Point& x) {
    if (x.chart() != sys.chart())
        throw DomainError("chart-mismatch", "point chart does not match the system");
    if (static_cast<int>(x.dim()) != sys.point_dim())
        throw DomainError("chart-mismatch", "point dimension does not match the system");
    if (!sys.in_domain(x))
        throw DomainError("domain", "point outside the declared domain");
}

}  // namespace

std::vector<Scalar> moment_curve(const FunctionSystem& sys, const Point& x) {
    check_point(sys, x);
    std::vector<Scalar> v(sys.size());
    if (sys.kind() == SystemKind::Custom) {
        for (std::size_t i = 0; i < sys.size(); ++i) v[i] = sys.funcs_[i](x);
        return v;
    }
    for (std::size_t i = 0; i < sys.size(); ++i)
        v[i] = eval_monomial(sys.exponents()[i], x.coords());
    return v;
}

std::vector<Scalar> evaluate_at_coords(const FunctionSystem& sys,
                                       const std::vector<Scalar>& coords) {
    if (sys.kind() == SystemKind::Custom)
        throw DomainError("custom-system", "raw evaluation needs a monomial system");
    if (static_cast<int>(coords.size()) != sys.point_dim())
        throw DomainError("chart-mismatch", "coordinate count mismatch");
    std::vector<Scalar> v(sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i)
        v[i] = eval_monomial(sys.exponents()[i], coords);
    return v;
}

Matrix partials(const FunctionSystem& sys, const Point& x) {
    check_point(sys, x);
    if (!sys.differentiable())
        throw DomainError("non-differentiable", "system carries no derivatives");
    const int nd = sys.point_dim();
    Matrix out(sys.size(), static_cast<std::size_t>(nd));
    if (sys.kind() == SystemKind::Custom) {
        for (std::size_t i = 0; i < sys.size(); ++i) {
            std::vector<Scalar> g = sys.derivs_[i](x);
            if (static_cast<int>(g.size()) != nd)
                throw DomainError("bad-parameters", "derivative handle arity mismatch");
            for (int j = 0; j < nd; ++j) out.at(i, j) = g[j];
        }
        return out;
    }
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const auto& a = sys.exponents()[i];
        for (int j = 0; j < nd; ++j) {
            if (a.e[j] == 0) continue;  // derivative vanishes
            Scalar v(a.e[j]);
            for (int t = 0; t < nd; ++t) {
                const int p = t == j ? a.e[t] - 1 : a.e[t];
                if (p > 0) v *= x.coords()[t].pow(static_cast<unsigned long>(p));
            }
            out.at(i, j) = v;
        }
    }
    return out;
}

bool validate_independence(const FunctionSystem& sys, std::uint64_t seed) {
    const std::size_t m = sys.size();
    for (int attempt = 0; attempt < 3; ++attempt) {
        Rng rng = Rng::derive(seed, 0xba515, static_cast<std::uint64_t>(attempt));
        std::vector<std::vector<Scalar>> rows;
        std::set<std::string> seen;
        while (rows.size() < m) {
            std::vector<Scalar> coords(sys.point_dim());
            for (auto& c : coords) c = Scalar(rng.uniform(-50, 50));
            try {
                Point x = sys.chart() == Chart::Affine ? Point::affine(coords)
                                                       : Point::projective(coords);
                if (!seen.insert(x.str()).second) continue;
                if (!sys.in_domain(x)) continue;
                rows.push_back(moment_curve(sys, x));
            } catch (const DomainError&) {
                continue;
            }
        }
        if (exactla::rank(Matrix::from_rows(rows)) == m) return true;
    }
    return false;
}

}  // namespace momentcone::basis
