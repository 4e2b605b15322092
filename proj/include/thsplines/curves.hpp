#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "thsplines/basis.hpp"
#include "thsplines/knots.hpp"
#include "thsplines/weights.hpp"

namespace thsplines {

using Point = std::vector<double>;

/// Normalized B-spline curve sum_j P_j N_{j,m}(x) in R^d. Immutable value;
/// editing operations return new models.
class CurveModel {
public:
    /// Computes weights (auto strategy). Throws DomainError on a count or
    /// dimension mismatch, if the knots fail `level`, or, for
    /// PositiveWeights and stricter, if some weight is not positive.
    CurveModel(BasisSpec spec, std::vector<Point> control_points,
               EnforcementLevel level = EnforcementLevel::Relaxed);

    [[nodiscard]] const BasisSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] const WeightSet& weights() const noexcept { return weights_; }
    [[nodiscard]] const std::vector<Point>& control_points() const noexcept { return points_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return points_.front().size(); }
    [[nodiscard]] EnforcementLevel level() const noexcept { return level_; }
    [[nodiscard]] const ValidationReport& validation() const noexcept { return report_; }

private:
    BasisSpec spec_;
    WeightSet weights_;
    std::vector<Point> points_;
    EnforcementLevel level_;
    ValidationReport report_;
};

/// Throws DomainError outside [domain_begin, domain_end]; the end point is
/// the left limit.
[[nodiscard]] Point eval_curve(const CurveModel& curve, double x);

/// Polygon: control points on the circumcircle of radius 1/cos(pi/p)
/// (the curve is a circle of radius circle_radius(m, p)); Unit: the same
/// polygon rescaled so that the curve is the unit circle.
enum class CircleScale { Polygon, Unit };

struct CircleSpec {
    int order = 3;
    int sides = 4;
    std::optional<double> theta;                 ///< defaults to pi/p
    std::optional<std::pair<int, int>> segment;  ///< (a, b), 0 <= a < b <= p
    CircleScale scale = CircleScale::Polygon;
};

/// Knot 2 k pi / p of the circle constructions.
[[nodiscard]] double circle_knot(int k, int sides) noexcept;

/// Radius of the circle traced by the polygon construction of order
/// m = 2n+1 with p sides, h = 2 pi / p:
///   r = C(2n, n+1) w(h) / (cos(h/2) sum_i rho_{i,n+1,n-1} cos((2i - n^2 + 1) h / 2))
/// where w(h) is the uniform weight. Equals 1 for m = 3.
[[nodiscard]] double circle_radius(int order, int sides);

/// Full circle on [0, 2 pi): knots 2 k pi / p for k = -2n .. p+2n and
/// P_j = (cos(theta + 2 j pi / p), sin(theta + 2 j pi / p)) / cos(pi / p),
/// j = 1 .. p+2n. Rejects p < m and specs carrying a segment.
[[nodiscard]] CurveModel make_circle(const CircleSpec& spec);

/// Single knot insertion by the sine-weighted analogue of Boehm's rule on
/// the unnormalized coefficients c_j = w_j P_j:
///   c'_i = alpha_i c_i + beta_{i-1} c_{i-1},
///   alpha_i = s(x, x_i) / s(x_{i+m-1}, x_i),  beta_i = s(x_{i+m}, x) / s(x_{i+m}, x_{i+1}),
/// clamped to alpha = 1, beta = 0 left of the affected range and alpha = 0,
/// beta = 1 right of it. Requires x in the domain and resulting multiplicity <= m.
[[nodiscard]] CurveModel insert_knot(const CurveModel& curve, double x_new);

/// Fallback: new control points from a least-squares fit of the old curve,
/// sampled m+1 times in every nonempty span of the refined knots.
[[nodiscard]] CurveModel insert_knot_by_collocation(const CurveModel& curve, double x_new);

/// Restricts a curve whose knots xa and xb both have multiplicity m to
/// [xa, xb), keeping only the B-splines that live there.
[[nodiscard]] CurveModel extract_segment(const CurveModel& curve, double xa, double xb);

/// make_circle, then m-1 insertions at 2 a pi / p and 2 b pi / p, then
/// extract_segment. Same parameterization as the full circle.
[[nodiscard]] CurveModel make_circle_segment(const CircleSpec& spec);

}  // namespace thsplines
