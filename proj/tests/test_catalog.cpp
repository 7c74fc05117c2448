#include "doctest.h"
#include "momentcone/catalog.hpp"
#include "momentcone/gridrank.hpp"
#include "momentcone/momentmap.hpp"
#include "momentcone/rng.hpp"

using namespace momentcone::catalog;
using momentcone::basis::FunctionSystem;
using momentcone::basis::Point;
using momentcone::exactla::Matrix;
using momentcone::exactla::Rng;
using momentcone::exactla::Scalar;

TEST_CASE("the degree-10 form vanishes at its thirty zeros and nowhere nearby") {
    auto h = harris();
    CHECK(h.zeros.size() == 30);
    CHECK(h.system.size() == 66);
    // construction already certifies the zeros; spot-check two of them plus a
    // non-zero point
    CHECK(h.eval(h.zeros[6]).is_zero());   // (1, 1, 1/2)
    CHECK(h.eval(h.zeros[18]).is_zero());  // (1, 1, sqrt2)
    const Scalar at123 = h.eval(Point::projective({Scalar(1), Scalar(2), Scalar(3)}));
    CHECK(at123.sign() > 0);
    CHECK(h.nonnegative_on_samples(2024, 100));
}

TEST_CASE("curve points of the thirty zeros are independent") {
    auto h = harris();
    std::vector<std::vector<Scalar>> cols;
    for (const auto& z : h.zeros) cols.push_back(moment_curve(h.system, z));
    CHECK(momentcone::exactla::rank(Matrix::from_columns(cols)) == 30);
}

TEST_CASE("grid polynomials carry their declared grids") {
    auto p12 = frak_p(1, 2);
    REQUIRE(p12.zeros.size() == 2);
    CHECK(p12.zeros[0] == Point::affine({Scalar(0)}));
    CHECK(p12.zeros[1] == Point::affine({Scalar(1)}));
    CHECK(frak_p(3, 2).zeros.size() == 8);
    CHECK(frak_q(3, 2).zeros.size() == 27);
    CHECK(frak_p(2, 3).nonnegative_on_samples(7, 60));
    CHECK(frak_q(1, 1).zeros.size() == 2);  // x(1-x) vanishes at {0, 1}
}

TEST_CASE("grid rank agrees with dense rank on small cells") {
    for (auto [n, d, primed] : {std::tuple{2, 2, false}, {3, 2, false}, {2, 2, true},
                                {3, 1, true}, {4, 1, true}, {1, 4, false}}) {
        auto poly = primed ? frak_q(n, d) : frak_p(n, d);
        auto sys = FunctionSystem::affine_monomials(n, 2 * d);
        std::vector<std::vector<Scalar>> cols;
        for (const auto& z : poly.zeros) cols.push_back(moment_curve(sys, z));
        const auto dense = momentcone::exactla::rank(Matrix::from_columns(cols));
        const auto structured =
            momentcone::gridrank::grid_rank(sys.exponents(), n, primed ? d + 1 : d);
        CHECK(dense == structured);
        CHECK(table2(n, d, primed).r == dense);
    }
}

TEST_CASE("table cells match the recorded values") {
    auto cell = table2(3, 4, false);
    CHECK(cell.m == 165);
    CHECK(cell.zcount == 64);
    CHECK(cell.r == 63);
    mpq_class w63(63, 165), z63(63, 64);
    w63.canonicalize();
    CHECK(cell.w == w63);
    CHECK(cell.z == z63);
    CHECK(table2(5, 2, false).r == 31);
    CHECK(table2(4, 2, true).r == 50);
    CHECK_THROWS_AS(table2(5, 6, false), momentcone::basis::DomainError);  // 7776 points
    CHECK(table2(5, 6, false, 8000).r == 3888);  // raised budget admits the cell
}

TEST_CASE("closed form for the primed quadratic column") {
    CHECK(r_prime_n2(1) == 2);
    CHECK(r_prime_n2(3) == 7);
    CHECK(r_prime_n2(10) == 56);
    for (int n = 3; n <= 10; ++n) CHECK(table2(n, 1, true).r == r_prime_n2(n));
}

TEST_CASE("moment-matrix extension counts") {
    auto c = flat_extension_counts(5, 7, 7678);
    CHECK(c.matrix_size == 792);
    CHECK(c.lower_added == 107127);
    CHECK(c.upper_added == 158283);
    auto zero = flat_extension_counts(5, 7, 0);
    CHECK(zero.lower_added == 0);
    CHECK(zero.upper_added == 0);
}

TEST_CASE("square-count lower bounds") {
    CHECK(pythagoras_lower(FunctionSystem::gapped({0, 1, 3, 7})) == 3);
    for (int d = 1; d <= 6; ++d)
        CHECK(pythagoras_lower(FunctionSystem::affine_monomials(1, d)) == 2);
    CHECK(pythagoras_lower(FunctionSystem::gapped({0})) == 1);
}

TEST_CASE("square counts grow when fresh exponents are added") {
    // gaps chosen so every pairwise sum is new
    std::vector<int> exps{0};
    std::size_t prev = pythagoras_lower(FunctionSystem::gapped(exps));
    for (int e : {1, 3, 7, 15, 31}) {
        exps.push_back(e);
        const std::size_t next = pythagoras_lower(FunctionSystem::gapped(exps));
        CHECK(next >= prev);
        prev = next;
    }
}

TEST_CASE("reference systems reproduce their artifacts") {
    auto systems = example_systems();
    REQUIRE(systems.size() == 4);

    const auto& inter = systems[1];
    CHECK(inter.jacobian_rank == 4);
    CHECK(inter.kernel_vector ==
          std::vector<Scalar>{Scalar(52), Scalar(-231), Scalar(225), Scalar(-63), Scalar(17)});
    // p = <kernel, curve>: p(-1) = -324 and p(0) = 52, so p is indefinite
    // values taken at raw representatives, without projective normalization
    auto eval_kernel = [&](const ExampleSystem& ex, const std::vector<Scalar>& coords) {
        const auto cv = evaluate_at_coords(ex.system, coords);
        Scalar v(0);
        for (std::size_t i = 0; i < cv.size(); ++i) v += ex.kernel_vector[i] * cv[i];
        return v;
    };
    CHECK(eval_kernel(inter, {Scalar(-1)}) == Scalar(-324));
    CHECK(eval_kernel(inter, {Scalar(0)}) == Scalar(52));

    const auto& multi = systems[3];
    CHECK(multi.system.size() == 28);
    CHECK(multi.jacobian_rank == 27);
    const std::vector<long> printed{0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0,
                                    -1, 0, 2, 1, 0, 0, -2, -2, 0, 1, 1, 0, 0, 0};
    REQUIRE(multi.kernel_vector.size() == 28);
    for (std::size_t i = 0; i < 28; ++i) CHECK(multi.kernel_vector[i] == Scalar(printed[i]));
    CHECK(eval_kernel(multi, {Scalar(1), Scalar(2), Scalar(3)}) == Scalar(72));
    CHECK(eval_kernel(multi, {Scalar(6), Scalar(2), Scalar(3)}) == Scalar(-1008));
}

TEST_CASE("kernel functional factors as the documented product") {
    // y (x + y) (x - z) (y - z) z (x - y + z) expanded over the listing order
    auto multi = example_systems()[3];
    Rng rng(99);
    for (int it = 0; it < 25; ++it) {
        const Scalar x(rng.uniform(-6, 6)), y(rng.uniform(-6, 6)), z(rng.uniform(-6, 6));
        if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
        const Scalar product = y * (x + y) * (x - z) * (y - z) * z * (x - y + z);
        const auto cv = evaluate_at_coords(multi.system, {x, y, z});
        Scalar v(0);
        for (std::size_t i = 0; i < cv.size(); ++i) v += multi.kernel_vector[i] * cv[i];
        CHECK(v == product);
    }
}

TEST_CASE("four-term sextic determinant identity") {
    // det DS at unit masses on (x, y) equals 2 (x-y)^4 (x+y)(2x^2+xy+2y^2)
    auto sys = FunctionSystem::gapped({0, 1, 2, 6});
    Rng rng(55);
    for (int it = 0; it < 20; ++it) {
        Scalar x(mpq_class(rng.uniform(-9, 9), rng.uniform(1, 4)));
        Scalar y(mpq_class(rng.uniform(-9, 9), rng.uniform(1, 4)));
        if (x == y) y += Scalar(1);
        momentcone::momentmap::AtomicMeasure mu(
            {momentcone::momentmap::Atom{Scalar(1), Point::affine({x})},
             momentcone::momentmap::Atom{Scalar(1), Point::affine({y})}});
        const Scalar lhs = momentcone::exactla::det(momentcone::momentmap::jacobian(sys, mu));
        const Scalar diff = x - y;
        const Scalar rhs = Scalar(2) * diff.pow(4) * (x + y) *
                           (Scalar(2) * x * x + x * y + Scalar(2) * y * y);
        CHECK(lhs == rhs);
    }
    // the closed form at (1, 2) evaluates to 72
    momentcone::momentmap::AtomicMeasure mu(
        {momentcone::momentmap::Atom{Scalar(1), Point::affine({Scalar(1)})},
         momentcone::momentmap::Atom{Scalar(1), Point::affine({Scalar(2)})}});
    CHECK(momentcone::exactla::det(momentcone::momentmap::jacobian(sys, mu)) == Scalar(72));
}

TEST_CASE("documented bound records") {
    auto proj = cara_bounds(2, 5, Space::Projective);
    bool has64 = false, has32 = false;
    for (const auto& b : proj) {
        if (b.is_upper && b.value == 64) has64 = true;
        if (b.is_upper && b.value == 32) has32 = true;
    }
    CHECK(has64);
    CHECK(has32);

    auto cube = cara_bounds(10, 1, Space::Cube);
    REQUIRE(cube.size() == 2);
    CHECK(cube[0].value == 56);
    CHECK_FALSE(cube[0].is_upper);
    CHECK(cube[1].value == 65);
    CHECK(cube[1].is_upper);

    for (int d = 2; d <= 7; ++d) {
        auto line = cara_bounds(1, d, Space::Line);
        for (const auto& b : line) CHECK(b.value == (d + 2) / 2);
    }
}
