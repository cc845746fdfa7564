#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qaoa/errors.hpp"
#include "qaoa/optimize.hpp"

using namespace qaoa;

TEST_CASE("grid scan is row-major with endpoints") {
    auto land = grid_scan([](const std::vector<double>& x) { return 10 * x[0] + x[1]; },
                          {{"a", 0, 1, 2}, {"b", 0, 2, 3}});
    CHECK(land.values == std::vector<double>{0, 1, 2, 10, 11, 12});
    CHECK(land.argmax() == 5);
    std::ostringstream csv;
    land.write_csv(csv);
    CHECK(csv.str() == "a,b,value\n0,0,0\n0,1,1\n0,2,2\n1,0,10\n1,1,11\n1,2,12\n");
}

TEST_CASE("argmax takes the first maximum") {
    auto land = grid_scan([](const std::vector<double>&) { return 1.0; }, {{"a", 0, 1, 4}});
    CHECK(land.argmax() == 0);
}

TEST_CASE("grid scan validation") {
    auto f = [](const std::vector<double>&) { return 0.0; };
    CHECK_THROWS_AS(grid_scan(f, {}), InvalidInput);
    CHECK_THROWS_AS(grid_scan(f, {{"a", 0, 1, 1}}), InvalidInput);
    CHECK_THROWS_AS(grid_scan(f, {{"a", 0, 1, 100}, {"b", 0, 1, 100}}, 5000), TooManyPoints);
}

TEST_CASE("refine climbs to a smooth maximum and never loses value") {
    auto f = [](const std::vector<double>& x) {
        return -std::pow(x[0] - 0.3, 2) - std::pow(x[1] + 0.2, 2);
    };
    auto r = refine(f, {0.0, 0.0}, 1e-9);
    CHECK(r.point[0] == doctest::Approx(0.3).epsilon(1e-7));
    CHECK(r.point[1] == doctest::Approx(-0.2).epsilon(1e-7));
    CHECK(r.value >= f({0.0, 0.0}));
}

TEST_CASE("a 2x2 grid round-trips through CSV") {
    auto land = grid_scan([](const std::vector<double>& x) { return std::sin(x[0]) * x[1]; },
                          {{"beta", -0.5, 0.25, 2}, {"gamma", 0.1, 0.3, 2}});
    std::stringstream ss;
    land.write_csv(ss);
    Landscape back = Landscape::read_csv(ss);
    CHECK(back.values == land.values);
    REQUIRE(back.axes.size() == 2);
    for (std::size_t a = 0; a < 2; ++a) {
        CHECK(back.axes[a].name == land.axes[a].name);
        CHECK(back.axes[a].lo == land.axes[a].lo);
        CHECK(back.axes[a].hi == land.axes[a].hi);
        CHECK(back.axes[a].points == land.axes[a].points);
    }
    std::stringstream bad("beta,value\n0,1\n");
    CHECK_THROWS_AS(Landscape::read_csv(bad), InvalidInput);
}
