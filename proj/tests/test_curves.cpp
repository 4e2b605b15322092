#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "circle_table.hpp"
#include "oracles.hpp"
#include "thsplines/curves.hpp"
#include "thsplines/error.hpp"

using namespace thsplines;

namespace {

double max_sampled_distance(const CurveModel& a, const CurveModel& b, std::size_t count) {
    double worst = 0.0;
    for (double x : domain_samples(a.spec(), count)) {
        const Point p = eval_curve(a, x), q = eval_curve(b, x);
        for (std::size_t d = 0; d < p.size(); ++d) worst = std::max(worst, std::abs(p[d] - q[d]));
    }
    return worst;
}

double max_radius_error(const CurveModel& c, double radius, std::size_t count) {
    double worst = 0.0;
    for (double x : domain_samples(c.spec(), count)) {
        const Point p = eval_curve(c, x);
        worst = std::max(worst, std::abs(std::hypot(p[0], p[1]) - radius));
    }
    return worst;
}

std::vector<Point> random_points(std::mt19937_64& rng, std::size_t count, std::size_t dim) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<Point> pts(count, Point(dim));
    for (auto& p : pts) {
        for (auto& v : p) v = u(rng);
    }
    return pts;
}

CurveModel example_curve(Family f, int m, std::mt19937_64& rng, std::size_t dim = 2) {
    const BasisSpec s(f, m, KnotVector(oracle::open_example_knots(m)));
    return {s, random_points(rng, s.dimension(), dim)};
}

}  // namespace

TEST_CASE("curve model invariants") {
    const BasisSpec s(Family::Trigonometric, 3, KnotVector(oracle::open_example_knots(3)));
    CHECK_THROWS_AS(CurveModel(s, std::vector<Point>(6, Point{0.0, 0.0})), DomainError);
    std::vector<Point> ragged(7, Point{0.0, 0.0});
    ragged[3] = Point{1.0};
    CHECK_THROWS_AS(CurveModel(s, ragged), DomainError);
    CHECK_THROWS_AS(CurveModel(s, std::vector<Point>(7, Point{})), DomainError);
    const CurveModel c(s, std::vector<Point>(7, Point{0.25, -3.0, 8.0}));
    CHECK(c.dimension() == 3);
    for (double x : domain_samples(s, 101)) {
        const Point p = eval_curve(c, x);
        CHECK(p[0] == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(p[1] == doctest::Approx(-3.0).epsilon(1e-14));
        CHECK(p[2] == doctest::Approx(8.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS((void)eval_curve(c, 3.5), DomainError);
}

TEST_CASE("open curves interpolate their end control points") {
    std::mt19937_64 rng(4);
    for (Family f : {Family::Trigonometric, Family::Hyperbolic}) {
        for (int m : {3, 5, 7}) {
            const auto c = example_curve(f, m, rng);
            const Point a = eval_curve(c, 0.0), b = eval_curve(c, 3.0);
            for (std::size_t d = 0; d < 2; ++d) {
                CHECK(std::abs(a[d] - c.control_points().front()[d]) <= 1e-12);
                CHECK(std::abs(b[d] - c.control_points().back()[d]) <= 1e-12);
            }
        }
    }
}

TEST_CASE("quadratic-like circles") {
    SUBCASE("four sides: weights are cos(pi/4)") {
        const auto c = make_circle({.order = 3, .sides = 4});
        for (double w : c.weights().weights) CHECK(std::abs(w - std::sqrt(0.5)) <= 1e-15);
        CHECK(max_radius_error(c, 1.0, 1000) <= 1e-12);
    }
    SUBCASE("eight sides, theta = pi/8") {
        const auto c = make_circle({.order = 3, .sides = 8, .theta = std::numbers::pi / 8});
        CHECK(max_radius_error(c, 1.0, 1000) <= 1e-12);
        // every polygon edge touches the circle
        const auto& p = c.control_points();
        for (std::size_t j = 0; j + 1 < p.size(); ++j) {
            CHECK(std::abs(circle_table::origin_to_segment(p[j][0], p[j][1], p[j + 1][0], p[j + 1][1]) - 1.0) <= 1e-10);
        }
    }
    CHECK(circle_radius(3, 8) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("higher order circles") {
    CHECK(circle_radius(5, 8) == doctest::Approx(2 * std::sqrt(2.0) / 3).epsilon(1e-14));
    CHECK(circle_radius(7, 8) == doctest::Approx(3 - 3 * std::sqrt(2.0) / 2).epsilon(1e-14));
    for (int m : {5, 7, 9}) {
        for (int p : {m, 8, 12, 16}) {
            if (p < m) continue;
            const auto poly = make_circle({.order = m, .sides = p});
            CHECK(max_radius_error(poly, circle_radius(m, p), 800) <= 1e-11);
            const auto unit = make_circle({.order = m, .sides = p, .scale = CircleScale::Unit});
            CHECK(max_radius_error(unit, 1.0, 800) <= 1e-11);
            const auto& q = unit.control_points();
            double gap = 1e9;
            for (std::size_t j = 0; j + 1 < q.size(); ++j) {
                gap = std::min(gap, circle_table::origin_to_segment(q[j][0], q[j][1], q[j + 1][0], q[j + 1][1]) - 1.0);
            }
            CHECK(gap >= 1e-3);
        }
    }
    CHECK_THROWS_AS((void)make_circle({.order = 7, .sides = 6}), DomainError);
    CHECK_THROWS_AS((void)make_circle({.order = 4, .sides = 8}), DomainError);
    CHECK_THROWS_AS((void)make_circle({.order = 5, .sides = 8, .segment = std::pair{1, 7}}), DomainError);
}

TEST_CASE("circle points are convex combinations of active control points") {
    for (int m : {3, 5, 7}) {
        const auto c = make_circle({.order = m, .sides = 8});
        for (double x : domain_samples(c.spec(), 500)) {
            const auto act = eval_active(c.spec(), c.weights(), x);
            double sum = 0.0;
            for (double v : act.values) {
                CHECK(v >= -1e-14);
                sum += v;
            }
            CHECK(std::abs(sum - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("knot insertion keeps the curve") {
    std::mt19937_64 rng(77);
    SUBCASE("existing interior knot") {
        for (Family f : {Family::Trigonometric, Family::Hyperbolic}) {
            for (int m : {3, 5, 7}) {
                const auto c = example_curve(f, m, rng, 3);
                for (double x : {0.5, 1.0, 2.0}) {
                    const auto r = insert_knot(c, x);
                    CHECK(r.control_points().size() == c.control_points().size() + 1);
                    CHECK(multiplicity(r.spec().knots(), x) == 2);
                    CHECK(max_sampled_distance(c, r, 2000) <= 1e-10);
                }
            }
        }
    }
    SUBCASE("midpoint keeps a partition of unity") {
        const auto c = example_curve(Family::Trigonometric, 3, rng);
        const auto r = insert_knot(c, 1.5);
        for (double x : domain_samples(r.spec(), 301)) {
            double sum = 0.0;
            for (double v : eval_active(r.spec(), r.weights(), x).values) sum += v;
            CHECK(std::abs(sum - 1.0) <= 1e-12);
        }
        CHECK(max_sampled_distance(c, r, 2000) <= 1e-10);
    }
    SUBCASE("long random insertion sequences") {
        for (Family f : {Family::Trigonometric, Family::Hyperbolic}) {
            auto c = example_curve(f, 5, rng);
            const auto original = c;
            std::uniform_real_distribution<double> u(0.0, 3.0);
            for (int i = 0; i < 25; ++i) c = insert_knot(c, u(rng));
            CHECK(max_sampled_distance(original, c, 3000) <= 1e-9);
        }
    }
    SUBCASE("raising a knot to full multiplicity") {
        auto c = example_curve(Family::Trigonometric, 5, rng);
        const auto original = c;
        for (int i = 0; i < 4; ++i) c = insert_knot(c, 1.0);
        CHECK(multiplicity(c.spec().knots(), 1.0) == 5);
        CHECK_THROWS_AS((void)insert_knot(c, 1.0), DomainError);
        CHECK(max_sampled_distance(original, c, 2000) <= 1e-10);
        CHECK_THROWS_AS((void)insert_knot(c, 3.5), DomainError);
    }
    SUBCASE("collocation fallback agrees") {
        for (Family f : {Family::Trigonometric, Family::Hyperbolic}) {
            const auto c = example_curve(f, 7, rng);
            const auto a = insert_knot(c, 1.7);
            const auto b = insert_knot_by_collocation(c, 1.7);
            REQUIRE(a.control_points().size() == b.control_points().size());
            for (std::size_t j = 0; j < a.control_points().size(); ++j) {
                for (std::size_t d = 0; d < 2; ++d) {
                    CHECK(std::abs(a.control_points()[j][d] - b.control_points()[j][d]) <= 1e-9);
                }
            }
            CHECK(max_sampled_distance(c, b, 2000) <= 1e-10);
        }
    }
}

TEST_CASE("circle segments") {
    const double pi = std::numbers::pi;
    const struct {
        int order, a, b;
        std::vector<std::array<double, 2>> table;
    } cases[] = {{5, 1, 7, circle_table::order5()}, {7, 0, 6, circle_table::order7()}};
    for (const auto& tc : cases) {
        CAPTURE(tc.order);
        const CircleSpec spec{.order = tc.order, .sides = 8, .theta = pi / 8, .segment = std::pair{tc.a, tc.b}};
        const auto seg = make_circle_segment(spec);
        const auto& pts = seg.control_points();
        REQUIRE(pts.size() == tc.table.size());
        for (std::size_t j = 0; j < pts.size(); ++j) {
            CHECK(std::abs(pts[j][0] - tc.table[j][0]) <= 1e-10);
            CHECK(std::abs(pts[j][1] - tc.table[j][1]) <= 1e-10);
        }
        const auto full = make_circle({.order = tc.order, .sides = 8, .theta = pi / 8});
        double worst = 0.0;
        for (double x : domain_samples(seg.spec(), 1000)) {
            const Point p = eval_curve(seg, x), q = eval_curve(full, x);
            worst = std::max({worst, std::abs(p[0] - q[0]), std::abs(p[1] - q[1])});
        }
        CHECK(worst <= 1e-10);
        CHECK(seg.spec().domain_begin() == doctest::Approx(2 * tc.a * pi / 8));
        CHECK(seg.spec().domain_end() == doctest::Approx(2 * tc.b * pi / 8));
        const Point first = eval_curve(seg, seg.spec().domain_begin());
        const Point last = eval_curve(seg, seg.spec().domain_end());
        CHECK(std::abs(first[0] - pts.front()[0]) + std::abs(first[1] - pts.front()[1]) <= 1e-12);
        CHECK(std::abs(last[0] - pts.back()[0]) + std::abs(last[1] - pts.back()[1]) <= 1e-12);
    }
}

TEST_CASE("segment extraction needs full multiplicity") {
    const auto c = make_circle({.order = 3, .sides = 8});
    CHECK_THROWS_AS((void)extract_segment(c, circle_knot(1, 8), circle_knot(5, 8)), DomainError);
}
