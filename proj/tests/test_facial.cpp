#include <algorithm>
#include <set>

#include "doctest.h"
#include "momentcone/catalog.hpp"
#include "momentcone/facial.hpp"
#include "momentcone/rng.hpp"

using namespace momentcone::facial;
using momentcone::catalog::frak_p;
using momentcone::catalog::frak_q;
using momentcone::catalog::harris;
using momentcone::decompose::GroundSet;
using momentcone::exactla::Matrix;
using momentcone::exactla::Rng;
using momentcone::exactla::Scalar;
using momentcone::momentmap::Atom;
using momentcone::momentmap::AtomicMeasure;
using momentcone::momentmap::moments;

namespace {

Point ap(long x) { return Point::affine({Scalar(x)}); }

MomentSequence seq(std::vector<Scalar> v) {
    MomentSequence s;
    s.values = std::move(v);
    return s;
}

FunctionSystem one_x_f1() {
    std::vector<momentcone::basis::Evaluator> funcs{
        [](const Point&) { return Scalar(1); },
        [](const Point& p) { return p.coords()[0]; },
        [](const Point& p) {
            const Scalar& x = p.coords()[0];
            return x.sign() > 0 ? x : Scalar(0);
        },
    };
    return FunctionSystem::custom(momentcone::basis::Chart::Affine, 1, funcs);
}

IndexSet all_indices(std::size_t n) {
    IndexSet v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

TEST_CASE("atoms of a full-support positive combination") {
    auto a12 = FunctionSystem::affine_monomials(1, 2);
    GroundSet x({ap(-1), ap(0), ap(2)});
    AtomicMeasure mu({Atom{Scalar(1), ap(-1)}, Atom{Scalar(1), ap(0)}, Atom{Scalar(1), ap(2)}});
    CHECK(atom_set(a12, x, moments(a12, mu)) == all_indices(3));
}

TEST_CASE("atoms of the zero sequence are empty") {
    auto a12 = FunctionSystem::affine_monomials(1, 2);
    GroundSet x({ap(-1), ap(0), ap(2)});
    CHECK(atom_set(a12, x, seq({Scalar(0), Scalar(0), Scalar(0)})).empty());
}

TEST_CASE("atoms require membership") {
    auto a12 = FunctionSystem::affine_monomials(1, 2);
    GroundSet x({ap(-1), ap(0), ap(2)});
    CHECK_THROWS_AS(atom_set(a12, x, seq({Scalar(0), Scalar(0), Scalar(1)})), DomainError);
}

TEST_CASE("V of an interior-like sequence is the whole set with zero representative") {
    auto a12 = FunctionSystem::affine_monomials(1, 2);
    GroundSet x({ap(-1), ap(0), ap(2)});
    AtomicMeasure mu({Atom{Scalar(1), ap(-1)}, Atom{Scalar(1), ap(0)}, Atom{Scalar(1), ap(2)}});
    auto v = v_set(a12, x, moments(a12, mu));
    CHECK(v.v == all_indices(3));
    for (const auto& c : v.representative) CHECK(c.is_zero());
}

TEST_CASE("V of a single atom in an independent family") {
    auto a12 = FunctionSystem::affine_monomials(1, 2);
    GroundSet x({ap(-1), ap(0), ap(2)});
    auto s = moments(a12, AtomicMeasure::dirac(Scalar(1), ap(0)));
    // plain route and refined route agree here
    CHECK(v_set(a12, x, s, false).v == IndexSet{1});
    CHECK(v_set(a12, x, s).v == IndexSet{1});
    // brute-force oracle for the plain route: for every other point some
    // feasible functional is positive there
    const Matrix curve = x.curve_matrix(a12);
    auto val = [&](const std::vector<Scalar>& p, std::size_t i) {
        Scalar v(0);
        for (std::size_t j = 0; j < 3; ++j) v += p[j] * curve.at(j, i);
        return v;
    };
    // p(x) = x^2 annihilates the atom at 0 and is positive at -1 and 2
    std::vector<Scalar> p{Scalar(0), Scalar(0), Scalar(1)};
    CHECK(val(p, 0).sign() > 0);
    CHECK(val(p, 2).sign() > 0);
    CHECK(s.riesz(p).is_zero());
}

TEST_CASE("full-system pair: tangency reveals the ambient exposed face") {
    // under {1, x, x^2} with s = moments of unit masses at -1 and 1, the only
    // ambient nonnegative annihilator is p = 0, so V is everything; the plain
    // restricted cone is simplicial and gives V = W instead
    auto a12 = FunctionSystem::affine_monomials(1, 2);
    GroundSet x({ap(-1), ap(0), ap(1)});
    AtomicMeasure mu({Atom{Scalar(1), ap(-1)}, Atom{Scalar(1), ap(1)}});
    const auto s = moments(a12, mu);
    CHECK(v_set(a12, x, s, false).v == IndexSet{0, 2});
    CHECK(v_set(a12, x, s, true).v == all_indices(3));
}

TEST_CASE("core variety of a member equals its atom set") {
    auto a13 = FunctionSystem::affine_monomials(1, 3);
    GroundSet x({ap(-2), ap(0), ap(1), ap(3)});
    AtomicMeasure mu({Atom{Scalar(2), ap(0)}, Atom{Scalar(1), ap(3)}});
    const auto s = moments(a13, mu);
    auto core = core_variety(a13, x, s.values);
    CHECK(core.core == atom_set(a13, x, s));
}

TEST_CASE("core variety empties out for a functional negative on a positive function") {
    auto a12 = FunctionSystem::affine_monomials(1, 2);
    GroundSet x({ap(-1), ap(0), ap(1)});
    // L(1) = -1, L(x) = 1, L(x^2) = 0; p = (1 + x + x^2)/5 is feasible and
    // strictly positive on X, so V_1 is already empty
    auto core = core_variety(a12, x, {Scalar(-1), Scalar(1), Scalar(0)});
    CHECK(core.core.empty());
    CHECK(core.trace.size() == 1);
    CHECK(core.iterations == 1);
}

TEST_CASE("face dimension and gamma space on small supports") {
    auto a12 = FunctionSystem::affine_monomials(1, 2);
    CHECK(face_dimension(a12, {ap(0)}) == 1);
    auto g = gamma_space(a12, {ap(0)});
    CHECK(g.dim == 2);
    // basis of { f : f(0) = 0 } inside lin {1, x, x^2} is {x, x^2}
    for (const auto& f : g.basis_vectors) CHECK(f[0].is_zero());

    CHECK(face_dimension(a12, {ap(0), ap(1), ap(2), ap(3)}) == 3);
    CHECK(gamma_space(a12, {ap(0), ap(1), ap(2)}).dim == 0);
}

TEST_CASE("grid supports match the dedicated grid rank") {
    auto p32 = frak_p(3, 2);
    auto a34 = FunctionSystem::affine_monomials(3, 4);
    CHECK(face_dimension(a34, p32.zeros) == 8);
    auto q32 = frak_q(3, 2);
    CHECK(face_dimension(a34, q32.zeros) == 23);
    // boundary supports keep at least n + 1 vanishing directions
    CHECK(gamma_space(a34, p32.zeros).dim >= 4);
}

TEST_CASE("face report ties the invariants together") {
    auto a13 = FunctionSystem::affine_monomials(1, 3);
    GroundSet x({ap(-2), ap(0), ap(1), ap(3)});
    AtomicMeasure mu({Atom{Scalar(2), ap(0)}, Atom{Scalar(1), ap(3)}});
    auto rep = face_report(a13, x, moments(a13, mu));
    CHECK(rep.w == IndexSet{1, 3});
    CHECK(std::includes(rep.v.begin(), rep.v.end(), rep.w.begin(), rep.w.end()));
    CHECK(rep.face_dim + rep.gamma_dim == a13.size());
    CHECK(rep.face_dim == 2);
}

TEST_CASE("maximal mass by coefficient recovery on independent points") {
    auto a13 = FunctionSystem::affine_monomials(1, 3);
    GroundSet x({ap(-2), ap(0), ap(1), ap(3)});
    AtomicMeasure mu({Atom{Scalar(2), ap(0)}, Atom{Scalar(1), ap(3)}});
    auto rep = max_mass(a13, x, moments(a13, mu), ap(0));
    CHECK(rep.rho == Scalar(2));
    CHECK(rep.kappa == Scalar(2));
    CHECK(rep.attained);
    CHECK(rep.x_outside_w_residual);
    CHECK(rep.x_outside_v_residual);
}

TEST_CASE("maximal mass on the kinked three-function system") {
    auto sys = one_x_f1();
    GroundSet x({ap(-2), ap(0), ap(1)});
    // (2, -2, 0) = s(0) + s(-2)
    auto s = seq({Scalar(2), Scalar(-2), Scalar(0)});
    auto rep = max_mass(sys, x, s, ap(-2));
    CHECK(rep.rho == Scalar(1));
    CHECK(rep.kappa == Scalar(1));
    CHECK(rep.attained);
    // the documented optimizer p = -x/2 + f_1 is feasible with value 1
    std::vector<Scalar> p{Scalar(0), Scalar(mpq_class(-1, 2)), Scalar(1)};
    for (const auto& y : x.points()) {
        const auto cv = moment_curve(sys, y);
        Scalar v(0);
        for (std::size_t i = 0; i < 3; ++i) v += p[i] * cv[i];
        CHECK(v.sign() >= 0);
    }
    CHECK(s.riesz(p) == Scalar(1));
    // residual (1, 0, 0) = s(0): mass point left both W and the plain V
    CHECK(rep.residual.values == std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(0)});
    CHECK(rep.x_outside_w_residual);
    CHECK(rep.x_outside_v_residual);
}

TEST_CASE("maximal mass requires the point in the ground set and a member sequence") {
    auto a12 = FunctionSystem::affine_monomials(1, 2);
    GroundSet x({ap(-1), ap(0), ap(2)});
    AtomicMeasure mu({Atom{Scalar(1), ap(0)}});
    CHECK_THROWS_AS(max_mass(a12, x, moments(a12, mu), ap(7)), DomainError);
    CHECK_THROWS_AS(max_mass(a12, x, seq({Scalar(0), Scalar(0), Scalar(1)}), ap(0)),
                    DomainError);
}

TEST_CASE("unpointed restricted cones are rejected") {
    // {x} on points of both signs: no e in lin A with e >= 1 on X
    auto sys = FunctionSystem::gapped({1});
    GroundSet x({ap(-1), ap(1)});
    MomentSequence s = seq({Scalar(0)});
    CHECK_THROWS_AS(max_mass(sys, x, s, ap(1)), DomainError);
}

TEST_CASE("separation property on quartic interpolation nodes") {
    auto a14 = FunctionSystem::affine_monomials(1, 4);
    GroundSet x({ap(0), ap(1), ap(2), ap(3), ap(4)});
    const std::vector<Point> pts{ap(0), ap(1), ap(2)};
    // oracle: scaled squared Lagrange factors like ((x-1)(x-2)/2)^2 witness
    // feasibility; their values on X are nonnegative by construction
    auto p0 = [](long v) { return Scalar((v - 1) * (v - 2) * (v - 1) * (v - 2)) / Scalar(4); };
    CHECK(p0(0) == Scalar(1));
    CHECK(p0(1) == Scalar(0));
    CHECK(p0(2) == Scalar(0));
    auto r = psp_check(a14, x, pts);
    REQUIRE(r.feasible);
    CHECK(r.functionals.size() == 3);
}

TEST_CASE("separation of a single point with the constant function present") {
    auto a12 = FunctionSystem::affine_monomials(1, 2);
    GroundSet x({ap(-1), ap(0), ap(2)});
    auto r = psp_check(a12, x, {ap(0)});
    CHECK(r.feasible);
}

TEST_CASE("randomized mass duality holds with exact equality") {
    Rng rng(301);
    auto a12 = FunctionSystem::affine_monomials(1, 2);
    for (int it = 0; it < 20; ++it) {
        std::set<long> used;
        std::vector<Point> pts;
        while (pts.size() < 5) {
            const long v = rng.uniform(-8, 8);
            if (used.insert(v).second) pts.push_back(ap(v));
        }
        GroundSet x(pts);
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < 3; ++i)
            atoms.push_back(Atom{rng.rational(1, 6, 3), pts[i]});
        const auto s = moments(a12, AtomicMeasure(atoms));
        auto rep = max_mass(a12, x, s, pts[rng.uniform(0, 4)]);
        CHECK(rep.rho == rep.kappa);
        CHECK(rep.x_outside_w_residual);
        CHECK(rep.x_outside_v_residual);
    }
}

TEST_CASE("thirty-zero face separation") {
    auto h = harris();
    GroundSet x(h.zeros);
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < 23; ++i) atoms.push_back(Atom{Scalar(1), h.zeros[i]});
    const auto s = moments(h.system, AtomicMeasure(atoms));

    IndexSet first23(23);
    for (std::size_t i = 0; i < 23; ++i) first23[i] = i;

    CHECK(atom_set(h.system, x, s) == first23);

    auto v = v_set(h.system, x, s);  // first-order refinement on by default
    CHECK(v.v == all_indices(30));

    // the plain restricted cone is simplicial here, so its V collapses to W
    CHECK(v_set(h.system, x, s, false).v == first23);

    auto core = core_variety(h.system, x, s.values);
    CHECK(core.core == first23);
    CHECK(core.trace.size() >= 2);
    CHECK(core.trace[0] == all_indices(30));  // ambient-level V_1
    CHECK(core.trace[1] == first23);          // plain V_2
    CHECK(core.iterations == 2);
}
