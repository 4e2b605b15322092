#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thsplines/knots.hpp"

namespace thsplines {

// The reference formulas below average over index sets whose sizes grow like
// (2n)! and (2n-1)!!; they are test oracles and refuse larger orders.
inline constexpr int kMaxHalfDegreeQ = 5;
inline constexpr int kMaxHalfDegreeQhat = 8;
inline constexpr int kMaxHalfDegreeCardinality = 20;

enum class WeightStrategy { Auto, BruteForceQ, PrunedQhat, SignVectorS, UniformRho };

[[nodiscard]] std::string_view to_string(WeightStrategy s) noexcept;
/// "auto", "q", "qhat", "s", "uniform".
[[nodiscard]] WeightStrategy parse_strategy(std::string_view text);

/// Normalization weights w_{j,m}, j = 0..dim-1, with the strategy used for each.
struct WeightSet {
    std::vector<double> weights;
    std::vector<WeightStrategy> used;
    WeightStrategy requested = WeightStrategy::Auto;

    [[nodiscard]] std::size_t size() const noexcept { return weights.size(); }
    [[nodiscard]] double operator[](std::size_t j) const { return weights[j]; }
};

/// Permutation of (-1 x (n-1), +1 x n); length 2n-1, entries sum to +1.
struct SignVector {
    std::vector<int> entries;
    friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// Coefficients of the q-binomial [a+b choose a]_q = sum_i rho_i q^i, i = 0..ab.
struct RhoTable {
    int a = 0;
    int b = 0;
    std::vector<std::uint64_t> coefficients;
};

struct Cardinalities {
    boost::multiprecision::cpp_int q;     ///< (2n)!
    boost::multiprecision::cpp_int qhat;  ///< (2n-1)!!
    boost::multiprecision::cpp_int s;     ///< binomial(2n-1, n-1)
};

/// Sum over all (2n)! permutations. Throws OrderTooLarge for n > max_half_degree.
/// `terms`, when given, is incremented once per summand. n = 7 takes minutes.
[[nodiscard]] double weight_bruteforce_q(const BasisSpec& spec, std::size_t j, std::uint64_t* terms = nullptr,
                                         int max_half_degree = kMaxHalfDegreeQ);

/// Sum over the (2n-1)!! canonical pairings. Throws OrderTooLarge for n > kMaxHalfDegreeQhat.
[[nodiscard]] double weight_pruned_qhat(const BasisSpec& spec, std::size_t j, std::uint64_t* terms = nullptr);

/// Depth-first sign-vector recursion over S_n; returns 1 for m = 1.
[[nodiscard]] double weight_signvector(const BasisSpec& spec, std::size_t j, std::uint64_t* terms = nullptr);

[[nodiscard]] std::vector<SignVector> enumerate_signvectors(int n);

/// Memoized top-down evaluation of the q-binomial recurrence.
[[nodiscard]] RhoTable rho_table(int a, int b);

/// Closed form on uniform spacing h, independent of j. `merged` folds the
/// terms i and n^2 - i that share a cosine argument up to sign.
[[nodiscard]] double weight_uniform(Family family, int n, double h, bool merged = true);
/// Checks that the window of basis j is uniform and applies the closed form.
[[nodiscard]] double weight_uniform(const BasisSpec& spec, std::size_t j);

/// Trigonometric weight from the constant Fourier coefficient of
/// prod_k sin((y - x_{j+k})/2), by periodic trapezoidal quadrature on `nodes`
/// points (0 selects 4n+8). Exact for nodes > n.
[[nodiscard]] double weight_integral_check(const BasisSpec& spec, std::size_t j, int nodes = 0);

struct WalzResult {
    double value = 0.0;
    std::uint64_t terms = 0;
};
/// Double-sum expression for the trigonometric weight on uniform spacing h;
/// 2^{n-1} product terms for n >= 1.
[[nodiscard]] WalzResult weight_walz_check(int n, double h);

/// Exact |Q_n|, |Qhat_n|, |S_n| for 1 <= n <= 20.
[[nodiscard]] Cardinalities cardinalities(int n);

/// 1 / binomial(2n-1, n-1) as a double (1 for n = 0).
[[nodiscard]] double signvector_prefactor(int n);

/// All weights of `spec`. Auto uses the uniform closed form on uniform
/// windows and the sign-vector recursion elsewhere.
[[nodiscard]] WeightSet compute_weights(const BasisSpec& spec, WeightStrategy strategy = WeightStrategy::Auto);
[[nodiscard]] double compute_weight(const BasisSpec& spec, std::size_t j, WeightStrategy strategy);

}  // namespace thsplines
