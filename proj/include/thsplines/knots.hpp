#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thsplines {

/// Nondecreasing knot sequence, 0-based. Immutable after construction.
class KnotVector {
public:
    KnotVector() = default;
    /// Throws DomainError if fewer than two values or not nondecreasing.
    explicit KnotVector(std::vector<double> values);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double front() const { return values_.front(); }
    [[nodiscard]] double back() const { return values_.back(); }

    /// Copy with `x` inserted after any equal values.
    [[nodiscard]] KnotVector with_inserted(double x) const;

    friend bool operator==(const KnotVector&, const KnotVector&) = default;

private:
    std::vector<double> values_;
};

enum class Family { Trigonometric, Hyperbolic };

[[nodiscard]] std::string_view to_string(Family f) noexcept;
/// Accepts "trig", "trigonometric", "hyp", "hyperbolic".
[[nodiscard]] Family parse_family(std::string_view text);

/// Family + odd order m = 2n+1 + knots. The constructor checks the order and
/// the knot count; family-specific spacing is a separate, per-call check
/// (see validate()).
class BasisSpec {
public:
    BasisSpec(Family family, int order, KnotVector knots);

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] int half_degree() const noexcept { return (order_ - 1) / 2; }
    [[nodiscard]] const KnotVector& knots() const noexcept { return knots_; }

    /// Number of B-splines, knots.size() - m.
    [[nodiscard]] std::size_t dimension() const noexcept { return knots_.size() - static_cast<std::size_t>(order_); }

    /// Parameter interval [x_{m-1}, x_{dim}] on which the B-splines form a
    /// complete partition of unity.
    [[nodiscard]] double domain_begin() const { return knots_[static_cast<std::size_t>(order_) - 1]; }
    [[nodiscard]] double domain_end() const { return knots_[dimension()]; }

    [[nodiscard]] BasisSpec with_knots(KnotVector knots) const { return {family_, order_, std::move(knots)}; }

private:
    Family family_;
    int order_;
    KnotVector knots_;
};

/// How much of the trigonometric spacing theory a caller insists on.
enum class EnforcementLevel {
    None,
    PositiveWeights,  ///< every normalization weight > 0 (checked by the caller that has weights)
    Relaxed,          ///< x_{j+2n} - x_{j+1} < pi
    Strict,           ///< x_{j+m} - x_j < pi
};

struct ValidationReport {
    bool nondecreasing = true;
    bool enough_knots = true;
    bool odd_order = true;
    bool strict = true;   ///< trivially true for the hyperbolic family
    bool relaxed = true;
    std::vector<std::size_t> strict_failures;   ///< indices j violating the strict bound
    std::vector<std::size_t> relaxed_failures;
    std::vector<std::string> warnings;

    [[nodiscard]] bool passes(EnforcementLevel level) const noexcept;
};

[[nodiscard]] ValidationReport validate(const BasisSpec& spec);
/// Validates raw inputs without constructing a BasisSpec (which would throw).
[[nodiscard]] ValidationReport validate(Family family, int order, std::span<const double> knots);

/// Throws DomainError describing the first failure at `level`. PositiveWeights
/// is treated like None here; weight positivity is checked where weights exist.
void enforce(const ValidationReport& report, EnforcementLevel level);

/// Exact-equality count.
[[nodiscard]] std::size_t multiplicity(const KnotVector& knots, double value) noexcept;

/// Spacing h if the gaps of knots[j..j+m] are all equal within
/// 1e-14 * max(1, |h|); empty otherwise. Throws DomainError if the window is
/// out of range.
[[nodiscard]] std::optional<double> is_uniform(const KnotVector& knots, std::size_t j, int m);

/// Index k with knots[k] <= x < knots[k+1], clamped to the spec's domain so
/// that x == domain_end() maps to the last nonempty span. Throws DomainError
/// for x outside [domain_begin, domain_end].
[[nodiscard]] std::size_t find_span(const BasisSpec& spec, double x);

// Text formats ---------------------------------------------------------------

/// Parses a knot list. Accepts plain lists ("0, 0.5 1;2") and the generators
///   open(m; a, interior..., b)   -> a repeated m times, interior, b repeated m times
///   uniform(start, step, count)  -> start + k*step, k = 0..count-1
/// Numbers may be written as `pi`, `2pi`, `pi/4`, `3*pi/8`, `-2*pi/3` or decimals.
[[nodiscard]] KnotVector parse_knots(std::string_view text);

/// Single scalar in the same number syntax as parse_knots.
[[nodiscard]] double parse_number(std::string_view token);

/// Comma-separated list with 17 significant digits; parse_knots round-trips it.
[[nodiscard]] std::string format_knots(const KnotVector& knots);

}  // namespace thsplines
