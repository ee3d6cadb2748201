#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "elsim/field.hpp"
#include "elsim/grid.hpp"
#include "elsim/norms.hpp"
#include "elsim/operators.hpp"

using namespace elsim;

namespace {

ScalarField sample_1d(const GridSpec& g, double (*fn)(double)) {
    ScalarField f(g, 1);
    for (int i = 0; i < g.nodes(0); ++i) f.value(0, i) = fn(g.coord(0, i));
    return f;
}

}  // namespace

TEST_CASE("second-order stencils are exact on quadratics, 1d") {
    const GridSpec g = GridSpec::line(9, 2.0);
    ScalarField f(g, 1);
    for (int i = 0; i < 9; ++i) {
        const double x = g.coord(0, i);
        f.value(0, i) = 1.5 + 0.25 * x - 2.0 * x * x;
    }
    const ScalarField dx = partial(f, 0);
    const ScalarField lap = laplacian(f);
    for (int i = 0; i < 9; ++i) {
        const double x = g.coord(0, i);
        CHECK(dx.value(0, i) == doctest::Approx(0.25 - 4.0 * x).epsilon(1e-12));
        CHECK(lap.value(0, i) == doctest::Approx(-4.0).epsilon(1e-12));
    }
}

TEST_CASE("gradient, divergence and laplacian are exact on 2d quadratics") {
    const GridSpec g = GridSpec::box(7, 9, 1.0, 2.0);
    ScalarField f(g, 1);
    VectorField v(g, 2);
    for (int ix = 0; ix < 7; ++ix)
        for (int iy = 0; iy < 9; ++iy) {
            const double x = g.coord(0, ix), y = g.coord(1, iy);
            const std::int64_t r = g.index(ix, iy);
            f.value(0, r) = x * x + 3.0 * x * y + 2.0 * y * y;
            v.value(0, r) = 2.0 * x * y;   // div = 2y + (dx of comp1)
            v.value(1, r) = y * y - x * x; // d/dy = 2y
        }
    const Field grad = gradient(f);
    REQUIRE(grad.components() == 2);
    const ScalarField lap = laplacian(f);
    const ScalarField dv = divergence(v);
    for (int ix = 0; ix < 7; ++ix)
        for (int iy = 0; iy < 9; ++iy) {
            const double x = g.coord(0, ix), y = g.coord(1, iy);
            const std::int64_t r = g.index(ix, iy);
            CHECK(grad.value(0, r) == doctest::Approx(2.0 * x + 3.0 * y).epsilon(1e-11));
            CHECK(grad.value(1, r) == doctest::Approx(3.0 * x + 4.0 * y).epsilon(1e-11));
            CHECK(lap.value(0, r) == doctest::Approx(6.0).epsilon(1e-10));
            CHECK(dv.value(0, r) == doctest::Approx(2.0 * y + 2.0 * y).epsilon(1e-11));
        }
}

TEST_CASE("gradient components are laid out per source component") {
    const GridSpec g = GridSpec::box(5, 5, 1.0, 1.0);
    Field f(g, 3);
    for (int ix = 0; ix < 5; ++ix)
        for (int iy = 0; iy < 5; ++iy) {
            const double x = g.coord(0, ix), y = g.coord(1, iy);
            const std::int64_t r = g.index(ix, iy);
            f.value(0, r) = x;
            f.value(1, r) = y;
            f.value(2, r) = x + 2.0 * y;
        }
    const Field grad = gradient(f);
    REQUIRE(grad.components() == 6);
    const std::int64_t r = g.index(2, 2);
    CHECK(grad.value(0, r) == doctest::Approx(1.0));  // d f0 / dx
    CHECK(grad.value(1, r) == doctest::Approx(0.0));  // d f0 / dy
    CHECK(grad.value(2, r) == doctest::Approx(0.0));
    CHECK(grad.value(3, r) == doctest::Approx(1.0));
    CHECK(grad.value(4, r) == doctest::Approx(1.0));
    CHECK(grad.value(5, r) == doctest::Approx(2.0));
}

TEST_CASE("laplacian converges at second order on sin(pi x)") {
    auto err = [](int n) {
        const GridSpec g = GridSpec::line(n, 1.0);
        const ScalarField f = sample_1d(g, [](double x) { return std::sin(M_PI * x); });
        const ScalarField lap = laplacian(f);
        ScalarField exact(g, 1);
        for (int i = 0; i < n; ++i)
            exact.value(0, i) = -M_PI * M_PI * std::sin(M_PI * g.coord(0, i));
        return norm_lq(lap - exact, 2.0);
    };
    const double ratio = err(33) / err(65);
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("interpolation reproduces multilinear fields exactly") {
    const GridSpec g = GridSpec::box(5, 6, 1.0, 1.0);
    Field f(g, 2);
    for (int ix = 0; ix < 5; ++ix)
        for (int iy = 0; iy < 6; ++iy) {
            const double x = g.coord(0, ix), y = g.coord(1, iy);
            const std::int64_t r = g.index(ix, iy);
            f.value(0, r) = 1.0 + 2.0 * x + 3.0 * y + 1.5 * x * y;
            f.value(1, r) = -0.5 + x - y;
        }
    for (double x : {0.0, 0.13, 0.5, 0.99, 1.0})
        for (double y : {0.0, 0.21, 0.77, 1.0}) {
            const auto vals = interpolate(f, {x, y});
            REQUIRE(vals.size() == 2);
            CHECK(vals[0] == doctest::Approx(1.0 + 2.0 * x + 3.0 * y + 1.5 * x * y)
                                 .epsilon(1e-13));
            CHECK(vals[1] == doctest::Approx(-0.5 + x - y).epsilon(1e-13));
            CHECK(interpolate_component(f, 1, {x, y}) == vals[1]);
        }
}

TEST_CASE("interpolation at nodes is exact bitwise") {
    const GridSpec g = GridSpec::line(7, 1.0);
    ScalarField f = sample_1d(g, [](double x) { return std::cos(3.0 * x) + x; });
    for (int i = 0; i < 7; ++i)
        CHECK(interpolate_component(f, 0, {g.coord(0, i), 0.0}) == f.value(0, i));
}

TEST_CASE("interpolation clamps roundoff but rejects real leaving") {
    const GridSpec g = GridSpec::line(5, 1.0);
    const ScalarField f = sample_1d(g, [](double x) { return x; });
    CHECK(interpolate_component(f, 0, {1.0 + 1e-13, 0.0}) == doctest::Approx(1.0));
    CHECK(interpolate_component(f, 0, {-1e-13, 0.0}) == doctest::Approx(0.0));
    CHECK_THROWS_AS((void)interpolate_component(f, 0, {1.0 + 1e-6, 0.0}), std::domain_error);
    CHECK_THROWS_AS((void)interpolate_component(f, 0, {-1e-6, 0.0}), std::domain_error);
}

TEST_CASE("partial rejects a bad axis") {
    const GridSpec g = GridSpec::line(5, 1.0);
    const ScalarField f(g, 1);
    CHECK_THROWS_AS((void)partial(f, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)partial(f, -1), std::invalid_argument);
}

TEST_CASE("divergence requires one component per axis") {
    const GridSpec g = GridSpec::box(5, 5, 1.0, 1.0);
    const Field f(g, 3);
    CHECK_THROWS_AS((void)divergence(f), std::invalid_argument);
}
