#include "thsplines/basis.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "thsplines/error.hpp"

namespace thsplines {
namespace {

// Order-1 indicator. At the closure point the evaluation is the left limit:
// the span ending there is active and a span starting there is not.
bool in_span(std::span<const double> t, std::size_t j, double x, const double* closure_end) {
    if (closure_end && x == *closure_end) return t[j] < x && x <= t[j + 1];
    return t[j] <= x && x < t[j + 1];
}

double unnormalized_rec(Family f, std::span<const double> t, std::size_t j, int r, double x, const double* end) {
    if (r == 1) {
        return in_span(t, j, x, end) ? 1.0 / half_sine(f, t[j + 1], t[j]) : 0.0;
    }
    const auto ru = static_cast<std::size_t>(r);
    if (t[j + ru] == t[j]) return 0.0;
    const double d = half_sine(f, t[j + ru], t[j]);
    return half_sine(f, x, t[j]) / d * unnormalized_rec(f, t, j, r - 1, x, end) +
           half_sine(f, t[j + ru], x) / d * unnormalized_rec(f, t, j + 1, r - 1, x, end);
}

// ratio num / den with the 0/0 -> 0 convention; callers only reach a zero
// denominator when the multiplied basis value is zero too.
double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

double normalized_rec(const BasisSpec& spec, const WeightLadder& ladder, std::size_t j, int r, double x,
                      const double* end) {
    const auto t = spec.knots().values();
    if (r == 1) return in_span(t, j, x, end) ? 1.0 : 0.0;
    const auto ru = static_cast<std::size_t>(r);
    if (t[j + ru] == t[j]) return 0.0;
    const Family f = spec.family();
    auto s = [f](double a, double b) { return half_sine(f, a, b); };

    const double w = ladder[ru / 2][j];
    const auto& lower = ladder[ru / 2 - 1];
    const double xj = t[j], xj1 = t[j + 1], xj2 = t[j + 2];
    const double xm = t[j + ru], xm1 = t[j + ru - 1], xm2 = t[j + ru - 2];

    double value = 0.0;
    if (const double n0 = normalized_rec(spec, ladder, j, r - 2, x, end); n0 != 0.0) {
        value += ratio(s(x, xj) * s(x, xj), s(xm1, xj) * s(xm2, xj)) * (w / lower[j]) * n0;
    }
    if (const double n1 = normalized_rec(spec, ladder, j + 1, r - 2, x, end); n1 != 0.0) {
        const double c = ratio(s(x, xj) * s(xm1, x), s(xm1, xj) * s(xm1, xj1)) +
                         ratio(s(xm, x) * s(x, xj1), s(xm, xj1) * s(xm1, xj1));
        value += c * (w / lower[j + 1]) * n1;
    }
    if (const double n2 = normalized_rec(spec, ladder, j + 2, r - 2, x, end); n2 != 0.0) {
        value += ratio(s(xm, x) * s(xm, x), s(xm, xj1) * s(xm, xj2)) * (w / lower[j + 2]) * n2;
    }
    return value;
}

void check_index(const BasisSpec& spec, std::size_t j) {
    if (j >= spec.dimension()) {
        throw DomainError("basis index j=" + std::to_string(j) + " out of range (dimension " +
                          std::to_string(spec.dimension()) + ")");
    }
}

void fill_active(const BasisSpec& spec, const WeightSet& weights, double x, std::size_t span, double* out) {
    const auto t = spec.knots().values();
    const Family f = spec.family();
    const int m = spec.order();
    // out[i] holds U_{span-r+1+i, r}, U = s(x_{j+r}, x_j) * T_{j,r}.
    out[0] = 1.0;
    for (int r = 1; r < m; ++r) {
        double carry = 0.0;
        for (int i = 0; i < r; ++i) {
            const std::size_t j = span + 1 - static_cast<std::size_t>(r) + static_cast<std::size_t>(i);
            const auto ru = static_cast<std::size_t>(r);
            // U_{j,r} feeds U_{j,r+1} (left term) and U_{j-1,r+1} (right term)
            const double u = out[i];
            const double right = half_sine(f, t[j + ru], x) / half_sine(f, t[j + ru], t[j]);
            out[i] = carry + right * u;
            carry = half_sine(f, x, t[j]) / half_sine(f, t[j + ru], t[j]) * u;
        }
        out[r] = carry;
    }
    const std::size_t first = span + 1 - static_cast<std::size_t>(m);
    for (int i = 0; i < m; ++i) out[i] *= weights[first + static_cast<std::size_t>(i)];
}

}  // namespace

double half_sine(Family family, double a, double b) noexcept {
    return family == Family::Trigonometric ? std::sin((a - b) / 2) : std::sinh((a - b) / 2);
}

double eval_unnormalized(Family family, std::span<const double> knots, std::size_t j, int order, double x,
                         const double* closure_end) {
    if (order < 1 || j + static_cast<std::size_t>(order) >= knots.size()) {
        throw DomainError("B-spline (j=" + std::to_string(j) + ", order " + std::to_string(order) +
                          ") does not fit in " + std::to_string(knots.size()) + " knots");
    }
    return unnormalized_rec(family, knots, j, order, x, closure_end);
}

double eval_unnormalized(const BasisSpec& spec, std::size_t j, int order, double x) {
    if (order > spec.order()) throw DomainError("evaluation order exceeds the spec order");
    const double end = spec.domain_end();
    return eval_unnormalized(spec.family(), spec.knots().values(), j, order, x, &end);
}

double eval_normalized_by_definition(const BasisSpec& spec, const WeightSet& weights, std::size_t j, double x) {
    check_index(spec, j);
    const auto t = spec.knots().values();
    const auto m = static_cast<std::size_t>(spec.order());
    if (t[j + m] == t[j]) return 0.0;
    return weights[j] * half_sine(spec.family(), t[j + m], t[j]) * eval_unnormalized(spec, j, spec.order(), x);
}

WeightLadder weight_ladder(const BasisSpec& spec) {
    WeightLadder ladder;
    for (int r = 1; r < spec.order(); r += 2) {
        ladder.push_back(compute_weights(BasisSpec(spec.family(), r, spec.knots())).weights);
    }
    ladder.push_back(compute_weights(spec).weights);
    return ladder;
}

double eval_normalized_recurrence(const BasisSpec& spec, const WeightLadder& ladder, std::size_t j, double x) {
    check_index(spec, j);
    if (ladder.size() != static_cast<std::size_t>(spec.half_degree()) + 1) {
        throw DomainError("weight ladder does not match the spec order");
    }
    const double end = spec.domain_end();
    return normalized_rec(spec, ladder, j, spec.order(), x, &end);
}

ActiveBasis eval_active(const BasisSpec& spec, const WeightSet& weights, double x) {
    const std::size_t span = find_span(spec, x);
    ActiveBasis a;
    a.first = span + 1 - static_cast<std::size_t>(spec.order());
    a.values.resize(static_cast<std::size_t>(spec.order()));
    fill_active(spec, weights, x, span, a.values.data());
    return a;
}

void check_samples(const BasisSpec& spec, std::span<const double> samples) {
    const double a = spec.domain_begin();
    const double b = spec.domain_end();
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i] >= a && samples[i] <= b)) bad.push_back(i);
    }
    if (bad.empty()) return;
    std::ostringstream os;
    os.precision(17);
    os << bad.size() << " sample(s) outside domain [" << a << ", " << b << "] at indices";
    for (std::size_t k = 0; k < bad.size() && k < 10; ++k) os << ' ' << bad[k];
    if (bad.size() > 10) os << " ...";
    throw DomainError(os.str());
}

Collocation assemble_collocation_serial(const BasisSpec& spec, const WeightSet& weights,
                                        std::span<const double> samples) {
    check_samples(spec, samples);
    Collocation c;
    c.rows = samples.size();
    c.cols = spec.dimension();
    c.order = spec.order();
    c.first.resize(c.rows);
    c.values.resize(c.rows * static_cast<std::size_t>(c.order));
    for (std::size_t i = 0; i < c.rows; ++i) {
        const std::size_t span = find_span(spec, samples[i]);
        c.first[i] = span + 1 - static_cast<std::size_t>(c.order);
        fill_active(spec, weights, samples[i], span, c.values.data() + i * static_cast<std::size_t>(c.order));
    }
    return c;
}

Collocation assemble_collocation(const BasisSpec& spec, const WeightSet& weights, std::span<const double> samples) {
    check_samples(spec, samples);
    Collocation c;
    c.rows = samples.size();
    c.cols = spec.dimension();
    c.order = spec.order();
    c.first.resize(c.rows);
    c.values.resize(c.rows * static_cast<std::size_t>(c.order));
    const auto rows = static_cast<std::ptrdiff_t>(c.rows);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        const std::size_t span = find_span(spec, samples[iu]);
        c.first[iu] = span + 1 - static_cast<std::size_t>(c.order);
        fill_active(spec, weights, samples[iu], span, c.values.data() + iu * static_cast<std::size_t>(c.order));
    }
    return c;
}

namespace {

BasisTable expand(const Collocation& c) {
    BasisTable t;
    t.rows = c.rows;
    t.cols = c.cols;
    t.values.assign(t.rows * t.cols, 0.0);
    for (std::size_t i = 0; i < c.rows; ++i) {
        const auto r = c.row(i);
        for (std::size_t k = 0; k < r.size(); ++k) t.values[i * t.cols + c.first[i] + k] = r[k];
    }
    return t;
}

}  // namespace

BasisTable tabulate_basis(const BasisSpec& spec, const WeightSet& weights, std::span<const double> samples) {
    return expand(assemble_collocation(spec, weights, samples));
}

BasisTable tabulate_basis_serial(const BasisSpec& spec, const WeightSet& weights, std::span<const double> samples) {
    return expand(assemble_collocation_serial(spec, weights, samples));
}

std::vector<double> domain_samples(const BasisSpec& spec, std::size_t count) {
    if (count < 2) throw DomainError("need at least 2 samples");
    const double a = spec.domain_begin();
    const double b = spec.domain_end();
    std::vector<double> x(count);
    for (std::size_t i = 0; i < count; ++i) {
        x[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    x.back() = b;
    return x;
}

}  // namespace thsplines
