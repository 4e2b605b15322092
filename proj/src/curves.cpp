#include "thsplines/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "thsplines/banded_qr.hpp"
#include "thsplines/error.hpp"

namespace thsplines {
namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

CurveModel::CurveModel(BasisSpec spec, std::vector<Point> control_points, EnforcementLevel level)
    : spec_(std::move(spec)), points_(std::move(control_points)), level_(level), report_(validate(spec_)) {
    if (points_.size() != spec_.dimension()) {
        throw DomainError("curve needs " + std::to_string(spec_.dimension()) + " control points, got " +
                          std::to_string(points_.size()));
    }
    const std::size_t d = points_.front().size();
    if (d == 0) throw DomainError("control points must have at least one coordinate");
    for (const auto& p : points_) {
        if (p.size() != d) throw DomainError("control points have inconsistent dimensions");
    }
    enforce(report_, level_);
    weights_ = compute_weights(spec_);
    if (level_ != EnforcementLevel::None) {
        for (std::size_t j = 0; j < weights_.size(); ++j) {
            if (!(weights_[j] > 0.0)) {
                throw DomainError("normalization weight w_" + std::to_string(j) + " is not positive");
            }
        }
    }
}

Point eval_curve(const CurveModel& curve, double x) {
    const ActiveBasis a = eval_active(curve.spec(), curve.weights(), x);
    Point out(curve.dimension(), 0.0);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const Point& p = curve.control_points()[a.first + i];
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += a.values[i] * p[c];
    }
    return out;
}

double circle_knot(int k, int sides) noexcept {
    return 2.0 * k * std::numbers::pi / sides;
}

double circle_radius(int order, int sides) {
    if (order < 3 || order % 2 == 0) throw DomainError("circle order must be odd and >= 3");
    if (sides < 3) throw DomainError("circle needs at least 3 sides");
    const int n = (order - 1) / 2;
    const double h = 2 * std::numbers::pi / sides;
    const double w = weight_uniform(Family::Trigonometric, n, h);
    const RhoTable rho = rho_table(n + 1, n - 1);
    double sum = 0.0;
    for (int i = 0; i < n * n; ++i) {
        sum += static_cast<double>(rho.coefficients[static_cast<std::size_t>(i)]) *
               std::cos((2 * i - n * n + 1) * h / 2);
    }
    return binomial(2 * n, n + 1) * w / (std::cos(h / 2) * sum);
}

CurveModel make_circle(const CircleSpec& spec) {
    const int m = spec.order;
    const int p = spec.sides;
    if (m < 3 || m % 2 == 0) throw DomainError("circle order must be odd and >= 3, got " + std::to_string(m));
    if (p < 3) throw DomainError("circle needs p >= 3 sides, got " + std::to_string(p));
    if (p < m) throw DomainError("circle needs p >= m (p=" + std::to_string(p) + ", m=" + std::to_string(m) + ")");
    if (spec.segment) throw DomainError("make_circle builds the full circle; use make_circle_segment");

    const int n = (m - 1) / 2;
    const double theta = spec.theta.value_or(std::numbers::pi / p);
    std::vector<double> knots;
    for (int k = -2 * n; k <= p + 2 * n; ++k) knots.push_back(circle_knot(k, p));

    double scale = 1.0 / std::cos(std::numbers::pi / p);
    if (spec.scale == CircleScale::Unit) scale /= circle_radius(m, p);
    std::vector<Point> points;
    for (int j = 1; j <= p + 2 * n; ++j) {
        const double phi = theta + 2.0 * j * std::numbers::pi / p;
        points.push_back({scale * std::cos(phi), scale * std::sin(phi)});
    }
    return CurveModel(BasisSpec(Family::Trigonometric, m, KnotVector(std::move(knots))), std::move(points),
                      EnforcementLevel::PositiveWeights);
}

namespace {

void check_insertion(const CurveModel& curve, double x) {
    const BasisSpec& spec = curve.spec();
    if (!(x >= spec.domain_begin() && x <= spec.domain_end())) {
        throw DomainError("insertion point outside the curve domain");
    }
    if (multiplicity(spec.knots(), x) + 1 > static_cast<std::size_t>(spec.order())) {
        throw DomainError("insertion would raise the knot multiplicity above the order");
    }
}

}  // namespace

CurveModel insert_knot(const CurveModel& curve, double x_new) {
    check_insertion(curve, x_new);
    const BasisSpec& spec = curve.spec();
    const auto t = spec.knots().values();
    const auto m = static_cast<std::size_t>(spec.order());
    const Family f = spec.family();
    const std::size_t span = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), x_new) - t.begin()) - 1;
    if (span + 1 >= t.size()) throw DomainError("insertion point beyond the last knot span");

    const BasisSpec refined = spec.with_knots(spec.knots().with_inserted(x_new));
    const WeightSet new_w = compute_weights(refined);

    auto alpha = [&](std::size_t i) {
        if (i + m <= span + 1) return 1.0;  // i <= span - m + 1
        if (i > span) return 0.0;
        return half_sine(f, x_new, t[i]) / half_sine(f, t[i + m - 1], t[i]);
    };
    auto beta = [&](std::size_t i) {
        if (i + m <= span) return 0.0;  // i <= span - m
        if (i >= span) return 1.0;
        return half_sine(f, t[i + m], x_new) / half_sine(f, t[i + m], t[i + 1]);
    };

    const auto& old_p = curve.control_points();
    const WeightSet& old_w = curve.weights();
    const std::size_t d = curve.dimension();
    std::vector<Point> points(old_p.size() + 1, Point(d, 0.0));
    for (std::size_t i = 0; i < points.size(); ++i) {
        Point& out = points[i];
        if (i < old_p.size()) {
            const double a = alpha(i) * old_w[i];
            if (a != 0.0) {
                for (std::size_t c = 0; c < d; ++c) out[c] += a * old_p[i][c];
            }
        }
        if (i >= 1) {
            const double b = beta(i - 1) * old_w[i - 1];
            if (b != 0.0) {
                for (std::size_t c = 0; c < d; ++c) out[c] += b * old_p[i - 1][c];
            }
        }
        for (std::size_t c = 0; c < d; ++c) out[c] /= new_w[i];
    }
    return CurveModel(refined, std::move(points), curve.level());
}

CurveModel insert_knot_by_collocation(const CurveModel& curve, double x_new) {
    check_insertion(curve, x_new);
    const BasisSpec refined = curve.spec().with_knots(curve.spec().knots().with_inserted(x_new));
    const WeightSet new_w = compute_weights(refined);
    const auto t = refined.knots().values();
    const auto m = static_cast<std::size_t>(refined.order());

    std::vector<double> xs;
    for (std::size_t k = m - 1; k < refined.dimension(); ++k) {
        if (!(t[k] < t[k + 1])) continue;
        for (std::size_t i = 0; i <= m; ++i) {
            xs.push_back(t[k] + (static_cast<double>(i) + 0.5) / static_cast<double>(m + 1) * (t[k + 1] - t[k]));
        }
    }
    const Collocation col = assemble_collocation(refined, new_w, xs);
    const std::size_t d = curve.dimension();
    BandedLeastSquares ls(refined.dimension(), refined.order(), d);
    for (std::size_t i = 0; i < xs.size(); ++i) ls.add_row(col.first[i], col.row(i), eval_curve(curve, xs[i]));
    const auto sol = ls.solve();
    std::vector<Point> points(refined.dimension(), Point(d));
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t c = 0; c < d; ++c) points[j][c] = sol[c][j];
    }
    return CurveModel(refined, std::move(points), curve.level());
}

CurveModel extract_segment(const CurveModel& curve, double xa, double xb) {
    const BasisSpec& spec = curve.spec();
    const auto t = spec.knots().values();
    const auto m = static_cast<std::size_t>(spec.order());
    if (!(xa < xb)) throw DomainError("segment needs xa < xb");
    if (multiplicity(spec.knots(), xa) != m || multiplicity(spec.knots(), xb) != m) {
        throw DomainError("segment end knots must have multiplicity equal to the order");
    }
    const auto r = static_cast<std::size_t>(std::lower_bound(t.begin(), t.end(), xa) - t.begin());
    const auto s = static_cast<std::size_t>(std::lower_bound(t.begin(), t.end(), xb) - t.begin());
    if (s + m > t.size() || s > spec.dimension()) throw DomainError("segment extends past the curve's B-splines");

    std::vector<double> knots(t.begin() + static_cast<std::ptrdiff_t>(r), t.begin() + static_cast<std::ptrdiff_t>(s + m));
    std::vector<Point> points(curve.control_points().begin() + static_cast<std::ptrdiff_t>(r),
                              curve.control_points().begin() + static_cast<std::ptrdiff_t>(s));
    return CurveModel(spec.with_knots(KnotVector(std::move(knots))), std::move(points), curve.level());
}

CurveModel make_circle_segment(const CircleSpec& spec) {
    if (!spec.segment) throw DomainError("make_circle_segment needs a segment (a, b)");
    const auto [a, b] = *spec.segment;
    if (!(0 <= a && a < b && b <= spec.sides)) {
        throw DomainError("segment needs 0 <= a < b <= p, got a=" + std::to_string(a) + ", b=" + std::to_string(b));
    }
    CircleSpec full = spec;
    full.segment.reset();
    CurveModel curve = make_circle(full);
    const double xa = circle_knot(a, spec.sides);
    const double xb = circle_knot(b, spec.sides);
    for (int i = 1; i < spec.order; ++i) curve = insert_knot(curve, xa);
    for (int i = 1; i < spec.order; ++i) curve = insert_knot(curve, xb);
    return extract_segment(curve, xa, xb);
}

}  // namespace thsplines
