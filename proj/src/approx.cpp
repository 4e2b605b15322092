#include "thsplines/approx.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "thsplines/banded_qr.hpp"
#include "thsplines/basis.hpp"
#include "thsplines/error.hpp"
#include "thsplines/weights.hpp"

namespace thsplines {

double builtin_target(double x) noexcept {
    const double u = x / 5 - 1;
    return std::sin(10 * x) * (4 * u * u + 1) / 5;
}

KnotVector make_fit_knots(int order, int p) {
    if (order < 1 || order % 2 == 0) throw DomainError("order must be odd and positive");
    if (p < 1) throw DomainError("p must be >= 1");
    std::vector<double> v(static_cast<std::size_t>(order), 0.0);
    for (int k = 1; k < 10 * p; ++k) v.push_back(static_cast<double>(k) / p);
    v.insert(v.end(), static_cast<std::size_t>(order), 10.0);
    return KnotVector(std::move(v));
}

std::vector<double> fit_grid(std::size_t count) {
    if (count < 2) throw DomainError("need at least 2 samples");
    std::vector<double> x(count);
    for (std::size_t i = 0; i < count; ++i) x[i] = 10.0 * static_cast<double>(i) / static_cast<double>(count - 1);
    return x;
}

FitReport least_squares_fit(const FitProblem& problem) {
    const auto start = std::chrono::steady_clock::now();
    const BasisSpec& spec = problem.spec;
    if (problem.x.size() != problem.f.size()) throw DomainError("sample abscissae and values differ in length");
    if (problem.x.size() < spec.dimension()) {
        throw DomainError("need at least " + std::to_string(spec.dimension()) + " samples, got " +
                          std::to_string(problem.x.size()));
    }
    const WeightSet w = compute_weights(spec);
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (!(w[j] > 0.0)) throw DomainError("normalization weight w_" + std::to_string(j) + " is not positive");
    }
    const Collocation col = assemble_collocation(spec, w, problem.x);

    BandedLeastSquares ls(spec.dimension(), spec.order());
    for (std::size_t i = 0; i < col.rows; ++i) ls.add_row(col.first[i], col.row(i), std::span(&problem.f[i], 1));

    FitReport rep;
    rep.coefficients = ls.solve().front();
    rep.ndof = spec.dimension();
    for (std::size_t i = 0; i < col.rows; ++i) {
        const auto r = col.row(i);
        double v = 0.0;
        for (std::size_t k = 0; k < r.size(); ++k) v += r[k] * rep.coefficients[col.first[i] + k];
        rep.linf_error = std::max(rep.linf_error, std::abs(v - problem.f[i]));
    }
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<ConvergenceRow> convergence_study(Family family, std::span<const int> orders, int levels,
                                              std::span<const double> x, std::span<const double> f) {
    if (levels < 1) throw DomainError("need at least one level");
    std::vector<ConvergenceRow> rows;
    for (const int m : orders) {
        std::optional<double> previous;
        for (int l = 1; l <= levels; ++l) {
            const int p = 1 << (l + 1);
            FitProblem prob{BasisSpec(family, m, make_fit_knots(m, p)), {x.begin(), x.end()}, {f.begin(), f.end()}, {}};
            const FitReport rep = least_squares_fit(prob);
            ConvergenceRow row;
            row.family = family;
            row.order = m;
            row.level = l;
            row.p = p;
            row.ndof = rep.ndof;
            row.linf_error = rep.linf_error;
            row.runtime_seconds = rep.runtime_seconds;
            row.at_floor = rep.linf_error < kPrecisionFloor;
            if (previous && !row.at_floor && *previous >= kPrecisionFloor) {
                row.rate = std::log2(*previous / rep.linf_error);
            }
            previous = rep.linf_error;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace thsplines
