#include "thsplines/banded_qr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thsplines/error.hpp"

namespace thsplines {

BandedLeastSquares::BandedLeastSquares(std::size_t cols, int bandwidth, std::size_t rhs_count)
    : cols_(cols),
      bw_(static_cast<std::size_t>(bandwidth)),
      nrhs_(rhs_count),
      band_(cols * static_cast<std::size_t>(bandwidth), 0.0),
      qtb_(cols * rhs_count, 0.0),
      rss_(rhs_count, 0.0),
      row_(static_cast<std::size_t>(bandwidth)),
      rhs_(rhs_count) {
    if (bandwidth < 1 || rhs_count < 1) throw DomainError("banded least squares needs bandwidth and rhs >= 1");
}

void BandedLeastSquares::add_row(std::size_t first, std::span<const double> values, std::span<const double> rhs) {
    if (values.size() > bw_ || first + values.size() > cols_ || rhs.size() != nrhs_) {
        throw DomainError("row does not fit the banded system");
    }
    std::fill(row_.begin(), row_.end(), 0.0);
    std::copy(values.begin(), values.end(), row_.begin());
    std::copy(rhs.begin(), rhs.end(), rhs_.begin());
    ++rows_;

    for (std::size_t p = 0; p < bw_ && first + p < cols_; ++p) {
        const double a = row_[p];
        if (a == 0.0) continue;
        const std::size_t k = first + p;
        const double d = r(k, 0);
        const double h = std::hypot(d, a);
        const double c = d / h;
        const double s = a / h;
        // row_[q] sits in column first+q = k + (q-p)
        for (std::size_t q = p; q < bw_ && k + (q - p) < cols_; ++q) {
            const double rk = r(k, q - p);
            r(k, q - p) = c * rk + s * row_[q];
            row_[q] = -s * rk + c * row_[q];
        }
        for (std::size_t j = 0; j < nrhs_; ++j) {
            const double bk = qtb_[k * nrhs_ + j];
            qtb_[k * nrhs_ + j] = c * bk + s * rhs_[j];
            rhs_[j] = -s * bk + c * rhs_[j];
        }
    }
    for (std::size_t j = 0; j < nrhs_; ++j) rss_[j] += rhs_[j] * rhs_[j];
}

std::vector<std::vector<double>> BandedLeastSquares::solve(double rank_tol) const {
    double scale = 0.0;
    for (std::size_t k = 0; k < cols_; ++k) scale = std::max(scale, std::abs(r(k, 0)));
    for (std::size_t k = 0; k < cols_; ++k) {
        if (!(std::abs(r(k, 0)) > rank_tol * scale)) {
            throw RankDeficient("least-squares matrix is rank deficient at column " + std::to_string(k) +
                                " (check sample coverage and knot spacing)");
        }
    }
    std::vector<std::vector<double>> sol(nrhs_, std::vector<double>(cols_, 0.0));
    for (std::size_t j = 0; j < nrhs_; ++j) {
        auto& x = sol[j];
        for (std::size_t kk = cols_; kk-- > 0;) {
            double acc = qtb_[kk * nrhs_ + j];
            for (std::size_t d = 1; d < bw_ && kk + d < cols_; ++d) acc -= r(kk, d) * x[kk + d];
            x[kk] = acc / r(kk, 0);
        }
    }
    return sol;
}

}  // namespace thsplines
