#include "momentcone/catalog.hpp"

#include <map>

#include "momentcone/gridrank.hpp"
#include "momentcone/momentmap.hpp"
#include "momentcone/rng.hpp"

namespace momentcone::catalog {

using basis::Chart;
using basis::DomainError;
using basis::ExponentVector;
using exactla::Rng;
using momentmap::Atom;
using momentmap::AtomicMeasure;

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

mpq_class frac(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::vector<Scalar> coefficients_in_order(const FunctionSystem& sys,
                                          const std::map<std::vector<int>, mpq_class>& terms) {
    std::vector<Scalar> coeffs(sys.size(), Scalar(0));
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const auto it = terms.find(sys.exponents()[i].e);
        if (it != terms.end()) coeffs[i] = Scalar(it->second);
    }
    return coeffs;
}

void check_declared_zeros(const NamedPolynomial& p) {
    for (const auto& z : p.zeros)
        if (!p.eval(z).is_zero())
            throw std::logic_error(p.name + ": declared zero does not vanish");
}

// prod_{j in roots} (x - j) as integer coefficients, ascending degree.
std::vector<mpz_class> poly_from_roots(const std::vector<long>& roots) {
    std::vector<mpz_class> f{1};
    for (long r : roots) {
        std::vector<mpz_class> next(f.size() + 1);
        for (std::size_t i = 0; i < f.size(); ++i) {
            next[i + 1] += f[i];
            next[i] -= r * f[i];
        }
        f = std::move(next);
    }
    return f;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Sum over coordinates of the univariate polynomial u(x_i), as a coefficient
// map over exponent vectors.
std::map<std::vector<int>, mpq_class> coordinate_sum(int n, const std::vector<mpz_class>& u) {
    std::map<std::vector<int>, mpq_class> terms;
    for (int i = 0; i < n; ++i)
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (u[k] == 0) continue;
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = static_cast<int>(k);
            terms[e] += mpq_class(u[k]);
        }
    return terms;
}

std::vector<Point> grid_points(int n, long lo, long hi) {
    std::vector<Point> pts;
    std::vector<Scalar> cur(static_cast<std::size_t>(n));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            pts.push_back(Point::affine(cur));
            return;
        }
        for (long v = lo; v <= hi; ++v) {
            cur[static_cast<std::size_t>(pos)] = Scalar(v);
            rec(pos + 1);
        }
    };
    rec(0);
    return pts;
}

}  // namespace

Scalar NamedPolynomial::eval(const Point& x) const {
    const auto curve = moment_curve(system, x);
    Scalar v(0);
    for (std::size_t i = 0; i < coefficients.size(); ++i) v += coefficients[i] * curve[i];
    return v;
}

bool NamedPolynomial::nonnegative_on_samples(std::uint64_t seed, int count) const {
    Rng rng(seed);
    for (int it = 0; it < count; ++it) {
        std::vector<Scalar> coords(static_cast<std::size_t>(system.point_dim()));
        bool nonzero = false;
        for (auto& c : coords) {
            c = Scalar(mpq_class(rng.uniform(-20, 20), rng.uniform(1, 7)));
            nonzero = nonzero || !c.is_zero();
        }
        if (system.chart() == Chart::Projective && !nonzero) coords[0] = Scalar(1);
        Point x = system.chart() == Chart::Affine ? Point::affine(coords)
                                                  : Point::projective(coords);
        if (eval(x).sign() < 0) return false;
    }
    return true;
}

NamedPolynomial harris() {
    NamedPolynomial h;
    h.name = "harris";
    h.system = FunctionSystem::projective_monomials(2, 10);

    std::map<std::vector<int>, mpq_class> terms;
    auto put = [&](int a, int b, int c, long coeff) { terms[{a, b, c}] = coeff; };
    put(10, 0, 0, 16), put(0, 10, 0, 16), put(0, 0, 10, 16);
    put(8, 2, 0, -36), put(2, 8, 0, -36), put(8, 0, 2, -36);
    put(2, 0, 8, -36), put(0, 8, 2, -36), put(0, 2, 8, -36);
    put(6, 4, 0, 20), put(4, 6, 0, 20), put(6, 0, 4, 20);
    put(4, 0, 6, 20), put(0, 6, 4, 20), put(0, 4, 6, 20);
    put(6, 2, 2, 57), put(2, 6, 2, 57), put(2, 2, 6, 57);
    put(4, 4, 2, -38), put(4, 2, 4, -38), put(2, 4, 4, -38);
    h.coefficients = coefficients_in_order(h.system, terms);

    const Scalar one(1), half(mpq_class(1, 2)), rt = Scalar::sqrt2();
    auto z = [&](Scalar a, Scalar b, Scalar c) {
        h.zeros.push_back(Point::projective({std::move(a), std::move(b), std::move(c)}));
    };
    z(one, one, Scalar(0)), z(one, -one, Scalar(0)), z(one, Scalar(0), one);
    z(one, Scalar(0), -one), z(Scalar(0), one, one), z(Scalar(0), one, -one);
    z(one, one, half), z(one, one, -half), z(one, -one, half), z(one, -one, -half);
    z(one, half, one), z(one, half, -one), z(one, -half, one), z(one, -half, -one);
    z(half, one, one), z(half, one, -one), z(half, -one, one), z(half, -one, -one);
    z(one, one, rt), z(one, one, -rt), z(one, -one, rt), z(one, -one, -rt);
    z(one, rt, one), z(one, rt, -one), z(one, -rt, one), z(one, -rt, -one);
    z(rt, one, one), z(rt, one, -one), z(rt, -one, one), z(rt, -one, -one);

    check_declared_zeros(h);
    return h;
}

std::vector<std::size_t> table1_ranks() {
    const NamedPolynomial h = harris();
    std::vector<std::size_t> ranks;
    ranks.reserve(h.zeros.size());
    std::vector<Atom> atoms;
    for (const auto& z : h.zeros) {
        atoms.push_back(Atom{Scalar(1), z});
        ranks.push_back(exactla::rank(momentmap::jacobian(h.system, AtomicMeasure(atoms))));
    }
    return ranks;
}

NamedPolynomial frak_p(int n, int d) {
    if (n < 1 || d < 1) throw DomainError("bad-parameters", "need n, d >= 1");
    NamedPolynomial p;
    p.name = "frak_p";
    p.system = FunctionSystem::affine_monomials(n, 2 * d);
    std::vector<long> roots(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) roots[static_cast<std::size_t>(j)] = j;
    const auto u = poly_from_roots(roots);
    p.coefficients = coefficients_in_order(p.system, coordinate_sum(n, poly_mul(u, u)));
    p.zeros = grid_points(n, 0, d - 1);
    check_declared_zeros(p);
    return p;
}

NamedPolynomial frak_q(int n, int d) {
    if (n < 1 || d < 1) throw DomainError("bad-parameters", "need n, d >= 1");
    NamedPolynomial q;
    q.name = "frak_q";
    q.system = FunctionSystem::affine_monomials(n, 2 * d);
    std::vector<long> roots;
    for (int j = 1; j < d; ++j) roots.push_back(j);
    const auto w = poly_from_roots(roots);
    // x (d - x) * w(x)^2, ascending coefficients
    const std::vector<mpz_class> edge{0, d, -1};
    const auto u = poly_mul(edge, poly_mul(w, w));
    q.coefficients = coefficients_in_order(q.system, coordinate_sum(n, u));
    q.zeros = grid_points(n, 0, d);
    check_declared_zeros(q);
    return q;
}

TableRow table2(int n, int d, bool primed, std::size_t budget) {
    if (n < 1 || d < 1) throw DomainError("bad-parameters", "need n, d >= 1");
    TableRow row;
    row.n = n;
    row.d = d;
    row.primed = primed;
    const int g = primed ? d + 1 : d;
    mpz_class zcount;
    mpz_ui_pow_ui(zcount.get_mpz_t(), static_cast<unsigned long>(g),
                  static_cast<unsigned long>(n));
    if (zcount > static_cast<unsigned long>(budget))
        throw DomainError("budget-exceeded",
                          "grid with " + zcount.get_str() + " points exceeds the budget");
    row.zcount = zcount.get_ui();
    row.m = binom(static_cast<unsigned long>(n + 2 * d), static_cast<unsigned long>(n)).get_ui();
    const auto sys = FunctionSystem::affine_monomials(n, 2 * d);
    row.r = gridrank::grid_rank(sys.exponents(), n, g);
    row.w = frac(static_cast<unsigned long>(row.r), row.m);
    row.z = frac(static_cast<unsigned long>(row.r), row.zcount);
    return row;
}

unsigned long r_prime_n2(int n) {
    if (n < 1) throw DomainError("bad-parameters", "need n >= 1");
    const unsigned long un = static_cast<unsigned long>(n);
    return (un * un + un + 2) / 2;
}

FlatExtensionCounts flat_extension_counts(int n, int d, const mpz_class& atoms) {
    if (n < 1 || d < 1 || atoms < 0) throw DomainError("bad-parameters", "need n, d >= 1");
    FlatExtensionCounts out;
    const unsigned long un = static_cast<unsigned long>(n);
    out.matrix_size = binom(static_cast<unsigned long>(d) + un, un);
    if (out.matrix_size >= atoms + 1) {
        out.lower_added = 0;
        out.upper_added = 0;
        return out;
    }
    unsigned long cap = static_cast<unsigned long>(d);
    while (binom(cap + un, un) < atoms + 1) ++cap;
    const mpz_class known = binom(static_cast<unsigned long>(2 * d) + un, un);
    out.lower_added = binom(2 * (cap - 1) + un, un) - known;
    out.upper_added = binom(2 * cap + un, un) - known;
    return out;
}

std::size_t pythagoras_lower(const FunctionSystem& sys) {
    if (sys.kind() == basis::SystemKind::Custom)
        throw DomainError("custom-system", "square counting needs exponent vectors");
    std::map<std::vector<int>, bool> squares;
    const auto& exps = sys.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (std::size_t j = i; j < exps.size(); ++j) {
            std::vector<int> sum(exps[i].e.size());
            for (std::size_t t = 0; t < sum.size(); ++t)
                sum[t] = exps[i].e[t] + exps[j].e[t];
            squares[sum] = true;
        }
    return (squares.size() + sys.size() - 1) / sys.size();
}

std::vector<ExponentVector> b26_listing_order() {
    std::vector<ExponentVector> order;
    for (int zdeg = 0; zdeg <= 6; ++zdeg)
        for (int ydeg = 0; ydeg <= 6 - zdeg; ++ydeg)
            order.push_back(ExponentVector{{6 - zdeg - ydeg, ydeg, zdeg}});
    return order;
}

std::vector<ExampleSystem> example_systems() {
    std::vector<ExampleSystem> out;

    auto jac_rank_and_kernel = [](ExampleSystem& ex) {
        std::vector<Atom> atoms;
        for (const auto& p : ex.points) atoms.push_back(Atom{Scalar(1), p});
        const auto j = momentmap::jacobian(ex.system, AtomicMeasure(atoms));
        ex.jacobian_rank = exactla::rank(j);
        const auto basis_vecs = exactla::kernel(j.transposed());
        if (basis_vecs.size() == 1) ex.kernel_vector = basis_vecs.front();
    };

    {
        ExampleSystem ex;
        ex.name = "complete-1d";
        ex.system = FunctionSystem::affine_monomials(1, 3);
        ex.points = {Point::affine({Scalar(0)}), Point::affine({Scalar(1)})};
        jac_rank_and_kernel(ex);
        out.push_back(std::move(ex));
    }
    {
        ExampleSystem ex;
        ex.name = "inter-singular";
        ex.system = FunctionSystem::gapped({0, 2, 3, 5, 6});
        ex.points = {Point::affine({Scalar(1)}), Point::affine({Scalar(2)})};
        jac_rank_and_kernel(ex);
        out.push_back(std::move(ex));
    }
    {
        ExampleSystem ex;
        ex.name = "boundary-singular";
        ex.system = FunctionSystem::gapped({0, 1, 2, 6});
        ex.points = {Point::affine({Scalar(1)}), Point::affine({Scalar(2)})};
        jac_rank_and_kernel(ex);
        out.push_back(std::move(ex));
    }
    {
        ExampleSystem ex;
        ex.name = "inter-singular-multi";
        ex.system = FunctionSystem::projective_ordered(2, 6, b26_listing_order(), "paper-B26");
        auto pp = [](long a, long b, long c) {
            return Point::projective({Scalar(a), Scalar(b), Scalar(c)});
        };
        ex.points = {pp(1, 0, 0), pp(0, 1, 0), pp(0, 0, 1), pp(1, 1, 0), pp(1, 0, 1),
                     pp(0, 1, 1), pp(1, -1, 0), pp(1, 0, -1), pp(1, 1, 1), pp(1, -1, 1)};
        jac_rank_and_kernel(ex);
        out.push_back(std::move(ex));
    }
    return out;
}

std::vector<CaraBound> cara_bounds(int n, int d, Space space, std::size_t budget) {
    if (n < 1 || d < 1) throw DomainError("bad-parameters", "need n, d >= 1");
    std::vector<CaraBound> bounds;
    auto add = [&](std::string label, bool upper, mpq_class value) {
        bounds.push_back(CaraBound{std::move(label), upper, std::move(value)});
    };
    switch (space) {
        case Space::Line: {
            const mpq_class v((d + 2) / 2);  // ceil((d+1)/2)
            add("minimal-atom-count (full univariate basis)", false, v);
            add("minimal-atom-count (full univariate basis)", true, v);
            break;
        }
        case Space::Projective: {
            const mpz_class m = binom(static_cast<unsigned long>(n + 2 * d),
                                      static_cast<unsigned long>(n));
            add("span-dimension minus n", true, mpq_class(m - n));
            if (n == 2 && d >= 5)
                add("plane even-degree zero-count bound", true,
                    frac(3 * d * (d - 1) + 4, 2));
            add("full-rank atom count", false,
                mpq_class(static_cast<unsigned long>(momentmap::na_formula(n, 2 * d))));
            break;
        }
        case Space::PlaneOdd: {
            add("plane odd-degree zero-count bound", true, frac(3 * d * (d - 1) + 2, 2));
            break;
        }
        case Space::Cube: {
            const mpz_class m = binom(static_cast<unsigned long>(n) + 2, 2);
            add("grid-rank lower bound", false, mpq_class(m - n));
            add("connected-image bound", true, mpq_class(m - 1));
            break;
        }
        case Space::Rn: {
            add("full-rank atom count", false,
                mpq_class(static_cast<unsigned long>(momentmap::na_formula(n, 2 * d))));
            try {
                add("grid-rank lower bound", false,
                    mpq_class(static_cast<unsigned long>(table2(n, d, false, budget).r)));
            } catch (const DomainError&) {
                // cell beyond the budget: no computed bound
            }
            const mpz_class m = binom(static_cast<unsigned long>(n + 2 * d),
                                      static_cast<unsigned long>(n));
            add("connected-image bound", true, mpq_class(m - 1));
            break;
        }
    }
    return bounds;
}

}  // namespace momentcone::catalog
