#include "thsplines/weights.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "thsplines/error.hpp"

namespace thsplines {
namespace {

using boost::multiprecision::cpp_int;

double even_kernel(Family f, double x) {
    return f == Family::Trigonometric ? std::cos(x) : std::cosh(x);
}

void check_window(const BasisSpec& spec, std::size_t j) {
    if (j >= spec.dimension()) {
        throw DomainError("basis index j=" + std::to_string(j) + " out of range (dimension " +
                          std::to_string(spec.dimension()) + ")");
    }
}

cpp_int binomial_exact(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    cpp_int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Depth-first sign-vector sum. `k` counts knots consumed so far (1-based);
// the leaf is reached once all 2n-1 signs are chosen.
class SignVectorSum {
public:
    SignVectorSum(Family family, std::span<const double> window, int n, std::uint64_t* terms)
        : family_(family), x_(window), n_(n), terms_(terms) {}

    double run() { return rec(1, 0, 0, -x_[1]); }

private:
    double rec(int k, int minus, int plus, double y) {
        if (k == 2 * n_) {
            if (terms_) ++*terms_;
            return even_kernel(family_, y / 2);
        }
        double w = 0.0;
        if (minus < n_ - 1) w += rec(k + 1, minus + 1, plus, y - x_[static_cast<std::size_t>(k) + 1]);
        if (plus < n_) w += rec(k + 1, minus, plus + 1, y + x_[static_cast<std::size_t>(k) + 1]);
        return w;
    }

    Family family_;
    std::span<const double> x_;  // x_[i] == x_{j+i}
    int n_;
    std::uint64_t* terms_;
};

class PairingSum {
public:
    PairingSum(Family family, std::span<const double> window, int n, std::uint64_t* terms)
        : family_(family), x_(window), used_(static_cast<std::size_t>(2 * n) + 1, false), terms_(terms) {}

    double run() { return rec(1.0); }

private:
    double rec(double product) {
        std::size_t first = 1;
        while (first < used_.size() && used_[first]) ++first;
        if (first == used_.size()) {
            if (terms_) ++*terms_;
            return product;
        }
        used_[first] = true;
        double sum = 0.0;
        for (std::size_t second = first + 1; second < used_.size(); ++second) {
            if (used_[second]) continue;
            used_[second] = true;
            sum += rec(product * even_kernel(family_, (x_[second] - x_[first]) / 2));
            used_[second] = false;
        }
        used_[first] = false;
        return sum;
    }

    Family family_;
    std::span<const double> x_;
    std::vector<bool> used_;
    std::uint64_t* terms_;
};

std::span<const double> window_of(const BasisSpec& spec, std::size_t j) {
    return spec.knots().values().subspan(j, static_cast<std::size_t>(spec.order()) + 1);
}

}  // namespace

std::string_view to_string(WeightStrategy s) noexcept {
    switch (s) {
        case WeightStrategy::Auto: return "auto";
        case WeightStrategy::BruteForceQ: return "q";
        case WeightStrategy::PrunedQhat: return "qhat";
        case WeightStrategy::SignVectorS: return "s";
        case WeightStrategy::UniformRho: return "uniform";
    }
    return "?";
}

WeightStrategy parse_strategy(std::string_view text) {
    if (text == "auto") return WeightStrategy::Auto;
    if (text == "q") return WeightStrategy::BruteForceQ;
    if (text == "qhat") return WeightStrategy::PrunedQhat;
    if (text == "s") return WeightStrategy::SignVectorS;
    if (text == "uniform") return WeightStrategy::UniformRho;
    throw ParseError("unknown strategy '" + std::string(text) + "' (expected auto|q|qhat|s|uniform)");
}

double weight_bruteforce_q(const BasisSpec& spec, std::size_t j, std::uint64_t* terms, int max_half_degree) {
    check_window(spec, j);
    const int n = spec.half_degree();
    if (n > max_half_degree) {
        throw OrderTooLarge("brute-force weight is limited to n <= " + std::to_string(max_half_degree) +
                            " ((2n)! terms), got n=" + std::to_string(n));
    }
    if (n == 0) return 1.0;
    const auto x = window_of(spec, j);
    const std::size_t len = static_cast<std::size_t>(2 * n);
    // kernel[a][b] for window positions 1..2n, one summand per ordered sequence
    std::vector<double> kernel(len * len);
    for (std::size_t a = 0; a < len; ++a) {
        for (std::size_t b = 0; b < len; ++b) {
            kernel[a * len + b] = even_kernel(spec.family(), (x[b + 1] - x[a + 1]) / 2);
        }
    }
    std::vector<std::size_t> free(len);
    std::iota(free.begin(), free.end(), std::size_t{0});
    std::uint64_t count = 0;
    // Fill the sequence two slots at a time; `left` entries of `free` are unused.
    auto rec = [&](auto&& self, std::size_t left, double prefix) -> double {
        if (left == 2) {
            count += 2;
            return prefix * kernel[free[0] * len + free[1]] + prefix * kernel[free[1] * len + free[0]];
        }
        if (left == 4) {
            // all 24 orderings of the last four slots, unrolled
            static constexpr std::size_t rest[4][4][2] = {
                {{0, 0}, {2, 3}, {1, 3}, {1, 2}},
                {{2, 3}, {0, 0}, {0, 3}, {0, 2}},
                {{1, 3}, {0, 3}, {0, 0}, {0, 1}},
                {{1, 2}, {0, 2}, {0, 1}, {0, 0}},
            };
            double sum = 0.0;
            for (std::size_t u = 0; u < 4; ++u) {
                for (std::size_t v = 0; v < 4; ++v) {
                    if (u == v) continue;
                    const double head = prefix * kernel[free[u] * len + free[v]];
                    const std::size_t r = free[rest[u][v][0]], t = free[rest[u][v][1]];
                    sum += head * kernel[r * len + t] + head * kernel[t * len + r];
                }
            }
            count += 24;
            return sum;
        }
        double sum = 0.0;
        for (std::size_t u = 0; u < left; ++u) {
            std::swap(free[u], free[left - 1]);
            const std::size_t first = free[left - 1];
            for (std::size_t v = 0; v + 1 < left; ++v) {
                std::swap(free[v], free[left - 2]);
                sum += self(self, left - 2, prefix * kernel[first * len + free[left - 2]]);
                std::swap(free[v], free[left - 2]);
            }
            std::swap(free[u], free[left - 1]);
        }
        return sum;
    };
    const double sum = rec(rec, len, 1.0);
    if (terms) *terms += count;
    return sum / static_cast<double>(count);
}

double weight_pruned_qhat(const BasisSpec& spec, std::size_t j, std::uint64_t* terms) {
    check_window(spec, j);
    const int n = spec.half_degree();
    if (n > kMaxHalfDegreeQhat) {
        throw OrderTooLarge("pruned weight is limited to n <= " + std::to_string(kMaxHalfDegreeQhat) +
                            " ((2n-1)!! terms), got n=" + std::to_string(n));
    }
    if (n == 0) return 1.0;
    std::uint64_t count = 0;
    const double sum = PairingSum(spec.family(), window_of(spec, j), n, &count).run();
    if (terms) *terms += count;
    return sum / static_cast<double>(count);
}

double signvector_prefactor(int n) {
    if (n <= 0) return 1.0;
    const cpp_int s = binomial_exact(static_cast<unsigned>(2 * n - 1), static_cast<unsigned>(n - 1));
    return 1.0 / s.convert_to<double>();
}

double weight_signvector(const BasisSpec& spec, std::size_t j, std::uint64_t* terms) {
    check_window(spec, j);
    const int n = spec.half_degree();
    if (n == 0) return 1.0;
    return signvector_prefactor(n) * SignVectorSum(spec.family(), window_of(spec, j), n, terms).run();
}

std::vector<SignVector> enumerate_signvectors(int n) {
    if (n < 1) throw DomainError("sign vectors need n >= 1");
    std::vector<SignVector> out;
    SignVector current;
    const int len = 2 * n - 1;
    // Same branch order as the weight recursion: -1 before +1.
    auto rec = [&](auto&& self, int minus, int plus) -> void {
        if (minus + plus == len) {
            out.push_back(current);
            return;
        }
        if (minus < n - 1) {
            current.entries.push_back(-1);
            self(self, minus + 1, plus);
            current.entries.pop_back();
        }
        if (plus < n) {
            current.entries.push_back(+1);
            self(self, minus, plus + 1);
            current.entries.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

RhoTable rho_table(int a, int b) {
    if (a < 0 || b < 0) throw DomainError("rho_table needs a, b >= 0");
    if (a + b > 66) throw DomainError("rho_table coefficients overflow 64 bits for a + b > 66");

    std::map<std::pair<int, int>, std::vector<std::uint64_t>> memo;
    auto rho = [&](auto&& self, int aa, int bb) -> const std::vector<std::uint64_t>& {
        if (auto it = memo.find({aa, bb}); it != memo.end()) return it->second;
        std::vector<std::uint64_t> r(static_cast<std::size_t>(aa * bb) + 1, 1);
        if (aa >= 2 && bb >= 2) {
            const auto& left = self(self, aa - 1, bb);   // rho_{., a-1, b}, length (a-1)b + 1
            const auto& right = self(self, aa, bb - 1);  // rho_{., a, b-1}, length a(b-1) + 1
            for (int i = 0; i <= aa - 1; ++i) r[i] = left[i];
            for (int i = aa; i <= (aa - 1) * bb; ++i) r[i] = left[i] + right[i - aa];
            for (int i = (aa - 1) * bb + 1; i <= aa * bb; ++i) r[i] = right[i - aa];
        }
        return memo.emplace(std::pair{aa, bb}, std::move(r)).first->second;
    };
    return RhoTable{a, b, rho(rho, a, b)};
}

double weight_uniform(Family family, int n, double h, bool merged) {
    if (n < 0) throw DomainError("half degree must be >= 0");
    if (n == 0) return 1.0;
    const RhoTable t = rho_table(n - 1, n);
    const auto& rho = t.coefficients;
    const int nn = n * n;
    auto arg = [&](int i) { return static_cast<double>(nn - 2 * i) * h / 2; };
    double sum = 0.0;
    std::uint64_t total = 0;
    for (int i = 0; i <= n * (n - 1); ++i) {
        total += rho[i];
        if (!merged || i < n) {
            sum += static_cast<double>(rho[i]) * even_kernel(family, arg(i));
        } else if (2 * i < nn) {
            sum += static_cast<double>(rho[i] + rho[nn - i]) * even_kernel(family, arg(i));
        } else if (2 * i == nn) {
            sum += static_cast<double>(rho[i]);
        }
        // 2i > n^2: already folded into its partner n^2 - i >= n
    }
    return sum / static_cast<double>(total);
}

double weight_uniform(const BasisSpec& spec, std::size_t j) {
    check_window(spec, j);
    const auto h = is_uniform(spec.knots(), j, spec.order());
    if (!h) throw DomainError("knot window of basis j=" + std::to_string(j) + " is not uniform");
    return weight_uniform(spec.family(), spec.half_degree(), *h);
}

double weight_integral_check(const BasisSpec& spec, std::size_t j, int nodes) {
    if (spec.family() != Family::Trigonometric) {
        throw DomainError("the integral form of the weight exists only for the trigonometric family");
    }
    check_window(spec, j);
    const int n = spec.half_degree();
    if (n == 0) return 1.0;
    if (nodes == 0) nodes = 4 * n + 8;
    if (nodes <= n) throw DomainError("quadrature needs more than n nodes to be exact");
    const auto x = window_of(spec, j);
    double mean = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double y = 2 * std::numbers::pi * k / nodes;
        double prod = 1.0;
        for (int i = 1; i <= 2 * n; ++i) prod *= std::sin((y - x[static_cast<std::size_t>(i)]) / 2);
        mean += prod;
    }
    mean /= nodes;
    return std::ldexp(mean, 2 * n - 1) * signvector_prefactor(n);
}

WalzResult weight_walz_check(int n, double h) {
    if (n < 0) throw DomainError("half degree must be >= 0");
    if (n == 0) return {1.0, 0};
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (int q = 1; q <= n; ++q) c[q] = std::cos((2 * q - 1) * h / 2);

    WalzResult res;
    double outer = 0.0;
    for (int i = 0; 2 * i <= n; ++i) {
        const int size = n - 2 * i;
        double inner = 0.0;
        // sum over increasing q_1 < ... < q_size in {1..n}
        auto rec = [&](auto&& self, int start, int left, double prod) -> void {
            if (left == 0) {
                inner += prod;
                ++res.terms;
                return;
            }
            for (int q = start; q <= n - left + 1; ++q) self(self, q + 1, left - 1, prod * c[q]);
        };
        rec(rec, 1, size, 1.0);
        const double central = binomial_exact(static_cast<unsigned>(2 * i), static_cast<unsigned>(i)).convert_to<double>();
        outer += std::ldexp(central, -2 * i) * inner;
    }
    res.value = std::ldexp(outer, n - 1) * signvector_prefactor(n);
    return res;
}

Cardinalities cardinalities(int n) {
    if (n < 1) throw DomainError("cardinalities need n >= 1");
    if (n > kMaxHalfDegreeCardinality) {
        throw DomainError("cardinalities are tabulated for n <= " + std::to_string(kMaxHalfDegreeCardinality));
    }
    Cardinalities c{1, 1, 0};
    for (int i = 2; i <= 2 * n; ++i) c.q *= i;
    for (int i = 2 * n - 1; i > 1; i -= 2) c.qhat *= i;
    c.s = binomial_exact(static_cast<unsigned>(2 * n - 1), static_cast<unsigned>(n - 1));
    return c;
}

double compute_weight(const BasisSpec& spec, std::size_t j, WeightStrategy strategy) {
    switch (strategy) {
        case WeightStrategy::BruteForceQ: return weight_bruteforce_q(spec, j);
        case WeightStrategy::PrunedQhat: return weight_pruned_qhat(spec, j);
        case WeightStrategy::SignVectorS: return weight_signvector(spec, j);
        case WeightStrategy::UniformRho: return weight_uniform(spec, j);
        case WeightStrategy::Auto: break;
    }
    check_window(spec, j);
    if (spec.half_degree() >= 1) {
        if (auto h = is_uniform(spec.knots(), j, spec.order())) {
            return weight_uniform(spec.family(), spec.half_degree(), *h);
        }
    }
    return weight_signvector(spec, j);
}

WeightSet compute_weights(const BasisSpec& spec, WeightStrategy strategy) {
    WeightSet ws;
    ws.requested = strategy;
    const std::size_t dim = spec.dimension();
    ws.weights.resize(dim);
    ws.used.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        WeightStrategy used = strategy;
        if (strategy == WeightStrategy::Auto) {
            used = spec.half_degree() >= 1 && is_uniform(spec.knots(), j, spec.order())
                       ? WeightStrategy::UniformRho
                       : WeightStrategy::SignVectorS;
        }
        ws.weights[j] = compute_weight(spec, j, used);
        ws.used[j] = used;
    }
    return ws;
}

}  // namespace thsplines
