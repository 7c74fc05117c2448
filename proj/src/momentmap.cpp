#include "momentcone/momentmap.hpp"

#include <set>

#include "momentcone/rng.hpp"

namespace momentcone::momentmap {

using exactla::Rng;

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, bool is_signed) : signed_(is_signed) {
    for (auto& a : atoms) {
        bool merged = false;
        for (auto& b : atoms_) {
            if (b.point == a.point) {
                b.mass += a.mass;
                merged = true;
                break;
            }
        }
        if (!merged) atoms_.push_back(std::move(a));
    }
    std::erase_if(atoms_, [](const Atom& a) { return a.mass.is_zero(); });
    if (!signed_) {
        for (const auto& a : atoms_)
            if (a.mass.sign() <= 0)
                throw DomainError("nonpositive-mass", "unsigned measure needs positive masses");
    }
}

Scalar MomentSequence::riesz(const std::vector<Scalar>& coeffs) const {
    if (coeffs.size() != values.size())
        throw DomainError("bad-parameters", "coefficient length mismatch");
    Scalar r(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r += coeffs[i] * values[i];
    return r;
}

MomentSequence moments(const FunctionSystem& sys, const AtomicMeasure& mu) {
    MomentSequence s;
    s.values.assign(sys.size(), Scalar(0));
    for (const auto& a : mu.atoms()) {
        const std::vector<Scalar> cv = moment_curve(sys, a.point);
        for (std::size_t i = 0; i < cv.size(); ++i) s.values[i] += a.mass * cv[i];
    }
    s.system = std::make_shared<FunctionSystem>(sys);
    return s;
}

Matrix jacobian(const FunctionSystem& sys, const AtomicMeasure& mu) {
    if (!sys.differentiable())
        throw DomainError("non-differentiable", "jacobian needs derivatives");
    const std::size_t m = sys.size();
    const std::size_t k = mu.size();
    const int nd = sys.point_dim();
    const bool affine = sys.chart() == Chart::Affine;
    const std::size_t per_atom = affine ? static_cast<std::size_t>(nd) + 1
                                        : static_cast<std::size_t>(nd);
    Matrix out(m, k * per_atom);
    for (std::size_t t = 0; t < k; ++t) {
        const Atom& atom = mu.atoms()[t];
        const Matrix d = partials(sys, atom.point);
        std::size_t col = t * per_atom;
        if (affine) {
            const auto cv = moment_curve(sys, atom.point);
            for (std::size_t i = 0; i < m; ++i) out.at(i, col) = cv[i];
            ++col;
        }
        for (int j = 0; j < nd; ++j, ++col)
            for (std::size_t i = 0; i < m; ++i)
                out.at(i, col) = atom.mass * d.at(i, j);
    }
    return out;
}

Regularity classify(const FunctionSystem& sys, const AtomicMeasure& mu) {
    return exactla::rank(jacobian(sys, mu)) == sys.size() ? Regularity::Regular
                                                          : Regularity::Singular;
}

namespace {

constexpr long kSampleBox = 50;

// Distinct random points with integer coordinates; projective samples reject
// the zero vector and compare by normal form.
std::vector<Point> sample_points(const FunctionSystem& sys, std::size_t k, Rng& rng) {
    std::vector<Point> pts;
    std::set<std::string> seen;
    while (pts.size() < k) {
        std::vector<Scalar> coords(sys.point_dim());
        bool nonzero = false;
        for (auto& c : coords) {
            c = Scalar(rng.uniform(-kSampleBox, kSampleBox));
            nonzero = nonzero || !c.is_zero();
        }
        if (sys.chart() == Chart::Projective && !nonzero) continue;
        Point x = sys.chart() == Chart::Affine ? Point::affine(std::move(coords))
                                               : Point::projective(std::move(coords));
        if (!sys.in_domain(x)) continue;
        if (!seen.insert(x.str()).second) continue;
        pts.push_back(std::move(x));
    }
    return pts;
}

}  // namespace

NAEstimate estimate_na(const FunctionSystem& sys, std::uint64_t seed, int max_trials) {
    if (!sys.differentiable())
        throw DomainError("non-differentiable", "N_A search needs derivatives");
    const std::size_t m = sys.size();
    const std::size_t per_atom = static_cast<std::size_t>(sys.ambient_n()) + 1;
    for (std::size_t k = 1; k <= m; ++k) {
        if (k * per_atom < m) continue;  // rank <= column count < m
        for (int trial = 0; trial < max_trials; ++trial) {
            Rng rng = Rng::derive(seed, k, static_cast<std::uint64_t>(trial));
            std::vector<Atom> atoms;
            for (Point& x : sample_points(sys, k, rng))
                atoms.push_back(Atom{Scalar(1), std::move(x)});
            AtomicMeasure mu(std::move(atoms));
            if (exactla::rank(jacobian(sys, mu)) == m)
                return NAEstimate{k, std::move(mu)};
        }
    }
    throw DomainError("na-search-failed", "no full-rank derivative found up to k = m");
}

std::size_t na_formula(int n, int d) {
    if (n < 1 || d < 1) throw DomainError("bad-parameters", "need n, d >= 1");
    if (d == 2) return static_cast<std::size_t>(n) + 1;
    if (n == 4 && d == 3) return 8;
    if (n == 2 && d == 4) return 6;
    if (n == 3 && d == 4) return 10;
    if (n == 4 && d == 4) return 15;
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + d),
                 static_cast<unsigned long>(n));
    mpz_class q = (binom + n) / (n + 1);  // ceil(binom / (n+1))
    return static_cast<std::size_t>(q.get_ui());
}

}  // namespace momentcone::momentmap
