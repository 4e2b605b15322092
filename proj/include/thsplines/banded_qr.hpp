#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace thsplines {

/// Least squares for a tall matrix whose rows have at most `bandwidth`
/// consecutive nonzeros. Rows are folded one at a time into an upper
/// triangular band R by Givens rotations, so memory is O(cols * bandwidth)
/// regardless of the row count. Several right-hand sides share R.
class BandedLeastSquares {
public:
    BandedLeastSquares(std::size_t cols, int bandwidth, std::size_t rhs_count = 1);

    /// Row with nonzeros values[0..] at columns first, first+1, ...
    /// `rhs` has rhs_count entries.
    void add_row(std::size_t first, std::span<const double> values, std::span<const double> rhs);

    /// One solution vector per right-hand side. Throws RankDeficient when a
    /// diagonal entry of R falls below rank_tol * max |diag|.
    [[nodiscard]] std::vector<std::vector<double>> solve(double rank_tol = 1e-12) const;

    [[nodiscard]] std::size_t rows_added() const noexcept { return rows_; }
    /// Sum of squared residuals per right-hand side (available before solve).
    [[nodiscard]] const std::vector<double>& residual_sum_of_squares() const noexcept { return rss_; }

private:
    double& r(std::size_t row, std::size_t offset) { return band_[row * bw_ + offset]; }
    [[nodiscard]] double r(std::size_t row, std::size_t offset) const { return band_[row * bw_ + offset]; }

    std::size_t cols_;
    std::size_t bw_;
    std::size_t nrhs_;
    std::size_t rows_ = 0;
    std::vector<double> band_;  // R(k, k+d) at band_[k*bw + d]
    std::vector<double> qtb_;   // (Q^T b)(k) for each rhs, k*nrhs + c
    std::vector<double> rss_;
    std::vector<double> row_;   // scratch
    std::vector<double> rhs_;
};

}  // namespace thsplines
