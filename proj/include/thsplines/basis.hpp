#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thsplines/knots.hpp"
#include "thsplines/weights.hpp"

namespace thsplines {

/// s(a, b) = sin((a-b)/2) or sinh((a-b)/2).
[[nodiscard]] double half_sine(Family family, double a, double b) noexcept;

/// T_{j,r}(x) / H_{j,r}(x) from the order-1 base case and the two-term
/// recurrence, any order r >= 1 (even orders are intermediates). Support is
/// half-open; if `closure_end` is given, the nonempty span ending there is
/// also closed on the right.
[[nodiscard]] double eval_unnormalized(Family family, std::span<const double> knots, std::size_t j, int order,
                                       double x, const double* closure_end = nullptr);
/// Same, with the closure at spec.domain_end(). Requires 1 <= order <= spec.order().
[[nodiscard]] double eval_unnormalized(const BasisSpec& spec, std::size_t j, int order, double x);

/// w_{j,m} s(x_{j+m}, x_j) B_{j,m}(x).
[[nodiscard]] double eval_normalized_by_definition(const BasisSpec& spec, const WeightSet& weights, std::size_t j,
                                                   double x);

/// Weights of every odd order 1, 3, ..., m on the same knot vector;
/// ladder[r/2][j] = w_{j,r}. Needed by the three-term recurrence.
using WeightLadder = std::vector<std::vector<double>>;
[[nodiscard]] WeightLadder weight_ladder(const BasisSpec& spec);

/// Three-term recurrence in the normalized functions of orders m, m-2, ..., 1.
[[nodiscard]] double eval_normalized_recurrence(const BasisSpec& spec, const WeightLadder& ladder, std::size_t j,
                                                double x);

/// The m normalized B-splines that can be nonzero at x: indices
/// first .. first+m-1, from a triangular sweep over the active span.
struct ActiveBasis {
    std::size_t first = 0;
    std::vector<double> values;
};
[[nodiscard]] ActiveBasis eval_active(const BasisSpec& spec, const WeightSet& weights, double x);

/// Banded collocation: row i holds the m active values at samples[i],
/// starting at column first[i].
struct Collocation {
    std::size_t rows = 0;
    std::size_t cols = 0;
    int order = 0;
    std::vector<std::size_t> first;
    std::vector<double> values;  // rows x order, row-major

    [[nodiscard]] std::span<const double> row(std::size_t i) const {
        return std::span<const double>(values).subspan(i * static_cast<std::size_t>(order),
                                                       static_cast<std::size_t>(order));
    }
};

/// Throws DomainError listing the indices of samples outside the domain.
void check_samples(const BasisSpec& spec, std::span<const double> samples);

/// OpenMP over samples; rows are independent so the result does not depend
/// on the schedule.
[[nodiscard]] Collocation assemble_collocation(const BasisSpec& spec, const WeightSet& weights,
                                               std::span<const double> samples);
[[nodiscard]] Collocation assemble_collocation_serial(const BasisSpec& spec, const WeightSet& weights,
                                                      std::span<const double> samples);

/// Dense samples x dimension matrix, row-major.
struct BasisTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

[[nodiscard]] BasisTable tabulate_basis(const BasisSpec& spec, const WeightSet& weights,
                                        std::span<const double> samples);
[[nodiscard]] BasisTable tabulate_basis_serial(const BasisSpec& spec, const WeightSet& weights,
                                               std::span<const double> samples);

/// `count` equispaced samples over the spec's domain, both ends included.
[[nodiscard]] std::vector<double> domain_samples(const BasisSpec& spec, std::size_t count);

}  // namespace thsplines
