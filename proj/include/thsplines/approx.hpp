#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thsplines/knots.hpp"

namespace thsplines {

/// f(x) = sin(10x) (4 (x/5 - 1)^2 + 1) / 5 on [0, 10].
[[nodiscard]] double builtin_target(double x) noexcept;

/// Open knots k/p, k = 0 (m times), 1, ..., 10p-1, 10p (m times);
/// dimension 10p + m - 1.
[[nodiscard]] KnotVector make_fit_knots(int order, int p);

/// `count` equispaced points on [0, 10], both ends included.
[[nodiscard]] std::vector<double> fit_grid(std::size_t count = 10001);

struct FitProblem {
    BasisSpec spec;
    std::vector<double> x;
    std::vector<double> f;
    std::optional<std::string> target_id;
};

struct FitReport {
    std::vector<double> coefficients;
    double linf_error = 0.0;
    std::size_t ndof = 0;
    double runtime_seconds = 0.0;
};

/// Minimizes sum_i (sum_j c_j N_j(x_i) - f_i)^2 by banded Givens QR.
/// Throws DomainError for too few samples, samples outside the domain or
/// nonpositive weights; RankDeficient if the samples do not determine the fit.
[[nodiscard]] FitReport least_squares_fit(const FitProblem& problem);

/// Below this L-infinity error the rate estimate is meaningless in double precision.
inline constexpr double kPrecisionFloor = 1e-13;

struct ConvergenceRow {
    Family family = Family::Trigonometric;
    int order = 0;
    int level = 0;
    int p = 0;
    std::size_t ndof = 0;
    double linf_error = 0.0;
    std::optional<double> rate;  ///< log2(e_{l-1} / e_l), absent on the first level or at the floor
    bool at_floor = false;
    double runtime_seconds = 0.0;
};

/// Levels l = 1..levels with p = 2^{l+1}; samples (x, f) must lie in [0, 10].
[[nodiscard]] std::vector<ConvergenceRow> convergence_study(Family family, std::span<const int> orders, int levels,
                                                            std::span<const double> x, std::span<const double> f);

}  // namespace thsplines
