#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "elsim/field.hpp"
#include "elsim/grid.hpp"

using namespace elsim;

TEST_CASE("line grid geometry") {
    const GridSpec g = GridSpec::line(5, 2.0);
    CHECK(g.dim() == 1);
    CHECK(g.nodes(0) == 5);
    CHECK(g.extent(0) == 2.0);
    CHECK(g.spacing(0) == 0.5);
    CHECK(g.min_spacing() == 0.5);
    CHECK(g.node_count() == 5);
    CHECK(g.coord(0, 0) == 0.0);
    CHECK(g.coord(0, 2) == 1.0);
    CHECK(g.coord(0, 4) == 2.0);
    CHECK(g.on_boundary(0));
    CHECK(g.on_boundary(4));
    CHECK(!g.on_boundary(2));
}

TEST_CASE("box grid lexicographic indexing") {
    const GridSpec g = GridSpec::box(5, 7, 1.0, 3.0);
    CHECK(g.dim() == 2);
    CHECK(g.node_count() == 35);
    CHECK(g.spacing(0) == 0.25);
    CHECK(g.spacing(1) == 0.5);
    CHECK(g.min_spacing() == 0.25);
    // axis 0 has stride ny, axis 1 has stride 1
    CHECK(g.index(0, 0) == 0);
    CHECK(g.index(0, 3) == 3);
    CHECK(g.index(1, 0) == 7);
    CHECK(g.index(2, 4) == 18);
    CHECK(g.on_boundary(0, 3));
    CHECK(g.on_boundary(3, 6));
    CHECK(!g.on_boundary(2, 3));
}

TEST_CASE("grid equality") {
    CHECK(GridSpec::line(9, 1.0) == GridSpec::line(9, 1.0));
    CHECK(!(GridSpec::line(9, 1.0) == GridSpec::line(9, 2.0)));
    CHECK(!(GridSpec::line(9, 1.0) == GridSpec::box(9, 9, 1.0, 1.0)));
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(GridSpec(3, {5, 5}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::line(4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::line(9, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::box(5, 4, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("time grid") {
    const TimeGrid tg(1.0, 4);
    CHECK(tg.t_end() == 1.0);
    CHECK(tg.steps() == 4);
    CHECK(tg.dt() == 0.25);
    CHECK(tg.time(0) == 0.0);
    CHECK(tg.time(3) == 0.75);
    CHECK(tg == TimeGrid(1.0, 4));
    CHECK(!(tg == TimeGrid(1.0, 5)));
    CHECK_THROWS_AS(TimeGrid(1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid(-1.0, 4), std::invalid_argument);
}

TEST_CASE("field construction and accessors") {
    const GridSpec g = GridSpec::line(5, 1.0);
    Field f(g, 2);
    CHECK(f.components() == 2);
    CHECK(f.node_count() == 5);
    for (int c = 0; c < 2; ++c)
        for (std::int64_t r = 0; r < 5; ++r) CHECK(f.value(c, r) == 0.0);
    f.value(1, 3) = 2.5;
    CHECK(f.value(1, 3) == 2.5);
    CHECK(f.raw().size() == 10);

    CHECK(Field::scalar(g).components() == 1);
    CHECK(Field::vector(g).components() == 1);
    CHECK(Field::director(g).components() == 3);
    CHECK(Field::tensor(g).components() == 1);

    const GridSpec g2 = GridSpec::box(5, 5, 1.0, 1.0);
    CHECK(Field::vector(g2).components() == 2);
    CHECK(Field::tensor(g2).components() == 4);
}

TEST_CASE("field value constructor checks the count") {
    const GridSpec g = GridSpec::line(5, 1.0);
    CHECK_THROWS_AS(Field(g, 2, std::vector<double>(9, 0.0)), std::invalid_argument);
    const Field f(g, 1, std::vector<double>{1, 2, 3, 4, 5});
    CHECK(f.value(0, 4) == 5.0);
}

TEST_CASE("field arithmetic") {
    const GridSpec g = GridSpec::line(5, 1.0);
    Field a(g, 1), b(g, 1);
    for (std::int64_t r = 0; r < 5; ++r) {
        a.value(0, r) = double(r);
        b.value(0, r) = 1.0;
    }
    const Field s = a + b;
    const Field d = a - b;
    const Field m = 2.0 * a;
    for (std::int64_t r = 0; r < 5; ++r) {
        CHECK(s.value(0, r) == double(r) + 1.0);
        CHECK(d.value(0, r) == double(r) - 1.0);
        CHECK(m.value(0, r) == 2.0 * double(r));
    }
    CHECK(max_abs(d) == 3.0);
    CHECK(min_value(a) == 0.0);
    CHECK(max_abs_diff(a, b) == 3.0);

    const Field other(GridSpec::line(6, 1.0), 1);
    CHECK_THROWS_AS((void)(a + other), std::invalid_argument);
    CHECK_THROWS_AS((void)max_abs_diff(a, other), std::invalid_argument);
}

TEST_CASE("ensure_finite rejects NaN and infinity") {
    const GridSpec g = GridSpec::line(5, 1.0);
    Field f(g, 1);
    CHECK_NOTHROW(f.ensure_finite("ok field"));
    f.value(0, 2) = std::nan("");
    CHECK_THROWS_AS(f.ensure_finite("bad field"), std::invalid_argument);
    f.value(0, 2) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(f.ensure_finite("bad field"), std::invalid_argument);
}
