#include "thsplines/knots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "thsplines/error.hpp"

namespace thsplines {

KnotVector::KnotVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw DomainError("knot vector needs at least 2 knots, got " + std::to_string(values_.size()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DomainError("knot " + std::to_string(i) + " is not finite");
        }
        if (i > 0 && values_[i] < values_[i - 1]) {
            throw DomainError("knots must be nondecreasing (x_" + std::to_string(i) + " < x_" +
                              std::to_string(i - 1) + ")");
        }
    }
}

KnotVector KnotVector::with_inserted(double x) const {
    std::vector<double> v = values_;
    v.insert(std::upper_bound(v.begin(), v.end(), x), x);
    return KnotVector(std::move(v));
}

std::string_view to_string(Family f) noexcept {
    return f == Family::Trigonometric ? "trig" : "hyp";
}

Family parse_family(std::string_view text) {
    if (text == "trig" || text == "trigonometric" || text == "T") return Family::Trigonometric;
    if (text == "hyp" || text == "hyperbolic" || text == "H") return Family::Hyperbolic;
    throw ParseError("unknown family '" + std::string(text) + "' (expected trig or hyp)");
}

BasisSpec::BasisSpec(Family family, int order, KnotVector knots)
    : family_(family), order_(order), knots_(std::move(knots)) {
    if (order_ < 1 || order_ % 2 == 0) {
        throw DomainError("order must be odd and positive, got " + std::to_string(order_));
    }
    if (knots_.size() < static_cast<std::size_t>(order_) + 1) {
        throw DomainError("order " + std::to_string(order_) + " needs at least " + std::to_string(order_ + 1) +
                          " knots, got " + std::to_string(knots_.size()));
    }
}

bool ValidationReport::passes(EnforcementLevel level) const noexcept {
    if (!nondecreasing || !enough_knots || !odd_order) return false;
    switch (level) {
        case EnforcementLevel::Strict: return strict;
        case EnforcementLevel::Relaxed: return relaxed;
        case EnforcementLevel::PositiveWeights:
        case EnforcementLevel::None: return true;
    }
    return true;
}

ValidationReport validate(Family family, int order, std::span<const double> knots) {
    ValidationReport r;
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (knots[i] < knots[i - 1]) r.nondecreasing = false;
    }
    r.odd_order = order >= 1 && order % 2 == 1;
    r.enough_knots = order >= 1 && knots.size() >= static_cast<std::size_t>(order) + 1;
    if (!r.enough_knots || !r.odd_order || family != Family::Trigonometric) return r;

    const auto m = static_cast<std::size_t>(order);
    const std::size_t n = (m - 1) / 2;
    const std::size_t dim = knots.size() - m;
    for (std::size_t j = 0; j < dim; ++j) {
        if (!(knots[j + m] - knots[j] < std::numbers::pi)) {
            r.strict = false;
            r.strict_failures.push_back(j);
        }
        if (n >= 1 && !(knots[j + 2 * n] - knots[j + 1] < std::numbers::pi)) {
            r.relaxed = false;
            r.relaxed_failures.push_back(j);
        }
    }
    if (!r.strict && r.relaxed) {
        r.warnings.push_back("strict spacing x_{j+m}-x_j < pi fails at " + std::to_string(r.strict_failures.size()) +
                             " window(s); relaxed condition holds");
    }
    if (!r.relaxed) {
        r.warnings.push_back("relaxed spacing x_{j+2n}-x_{j+1} < pi fails at " +
                             std::to_string(r.relaxed_failures.size()) + " window(s)");
    }
    return r;
}

ValidationReport validate(const BasisSpec& spec) {
    return validate(spec.family(), spec.order(), spec.knots().values());
}

void enforce(const ValidationReport& report, EnforcementLevel level) {
    if (!report.nondecreasing) throw DomainError("knots are not nondecreasing");
    if (!report.odd_order) throw DomainError("order must be odd and positive");
    if (!report.enough_knots) throw DomainError("not enough knots for the order");
    if (level == EnforcementLevel::Strict && !report.strict) {
        throw DomainError("strict trigonometric spacing x_{j+m}-x_j < pi fails at j=" +
                          std::to_string(report.strict_failures.front()));
    }
    if ((level == EnforcementLevel::Strict || level == EnforcementLevel::Relaxed) && !report.relaxed) {
        throw DomainError("relaxed trigonometric spacing x_{j+2n}-x_{j+1} < pi fails at j=" +
                          std::to_string(report.relaxed_failures.front()));
    }
}

std::size_t multiplicity(const KnotVector& knots, double value) noexcept {
    const auto v = knots.values();
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), value));
}

std::optional<double> is_uniform(const KnotVector& knots, std::size_t j, int m) {
    if (m < 1 || j + static_cast<std::size_t>(m) >= knots.size()) {
        throw DomainError("uniformity window [" + std::to_string(j) + ", " + std::to_string(j + m) +
                          "] out of range");
    }
    const double h = knots[j + 1] - knots[j];
    const double tol = 1e-14 * std::max(1.0, std::abs(h));
    for (std::size_t k = j + 1; k < j + static_cast<std::size_t>(m); ++k) {
        if (std::abs((knots[k + 1] - knots[k]) - h) > tol) return std::nullopt;
    }
    return h;
}

std::size_t find_span(const BasisSpec& spec, double x) {
    const double a = spec.domain_begin();
    const double b = spec.domain_end();
    if (!(a < b)) throw DomainError("basis domain is empty");
    if (!(x >= a && x <= b)) {
        std::ostringstream os;
        os.precision(17);
        os << "x = " << x << " outside domain [" << a << ", " << b << "]";
        throw DomainError(os.str());
    }
    const auto v = spec.knots().values();
    if (x == b) {
        // closure of the last interval
        auto it = std::lower_bound(v.begin(), v.end(), b);
        return static_cast<std::size_t>(it - v.begin()) - 1;
    }
    auto it = std::upper_bound(v.begin(), v.end(), x);
    return static_cast<std::size_t>(it - v.begin()) - 1;
}

}  // namespace thsplines
