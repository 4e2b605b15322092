#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "thsplines/error.hpp"
#include "thsplines/knots.hpp"

namespace thsplines {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_separator(char c) {
    return c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c));
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_separator(s[i])) ++i;
        std::size_t start = i;
        while (i < s.size() && !is_separator(s[i])) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

// factor := decimal | "pi" | decimal "pi"
double parse_factor(std::string_view tok, std::string_view whole) {
    if (tok.empty()) throw ParseError("malformed number '" + std::string(whole) + "'");
    double scale = 1.0;
    if (tok.size() >= 2 && tok.substr(tok.size() - 2) == "pi") {
        scale = std::numbers::pi;
        tok.remove_suffix(2);
        if (tok.empty()) return scale;
    }
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw ParseError("malformed number '" + std::string(whole) + "'");
    }
    return v * scale;
}

}  // namespace

double parse_number(std::string_view token) {
    std::string_view s = trim(token);
    const std::string_view whole = s;
    double sign = 1.0;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        if (s.front() == '-') sign = -1.0;
        s.remove_prefix(1);
    }
    // A leading sign belongs to the whole product; exponents like 1e-3 keep
    // theirs because '*' and '/' are the only operators split on here.
    double value = 1.0;
    char op = '*';
    std::size_t i = 0;
    while (true) {
        std::size_t j = s.find_first_of("*/", i);
        std::string_view part = trim(s.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i));
        double f = parse_factor(part, whole);
        value = op == '*' ? value * f : value / f;
        if (j == std::string_view::npos) break;
        op = s[j];
        i = j + 1;
    }
    if (!std::isfinite(value)) throw ParseError("number '" + std::string(whole) + "' is not finite");
    return sign * value;
}

KnotVector parse_knots(std::string_view text) {
    std::string_view s = trim(text);
    auto generator_args = [&](std::string_view name) -> std::optional<std::string_view> {
        if (s.substr(0, name.size()) != name) return std::nullopt;
        std::string_view rest = trim(s.substr(name.size()));
        if (rest.empty() || rest.front() != '(' || rest.back() != ')') {
            throw ParseError("generator '" + std::string(name) + "' needs parentheses");
        }
        return rest.substr(1, rest.size() - 2);
    };

    if (auto args = generator_args("open")) {
        const auto semi = args->find(';');
        if (semi == std::string_view::npos) throw ParseError("open(m; a, ..., b) needs ';' after the order");
        const double mv = parse_number(args->substr(0, semi));
        if (mv < 1 || mv != std::floor(mv)) throw ParseError("open(): order must be a positive integer");
        const auto m = static_cast<std::size_t>(mv);
        auto toks = split_list(args->substr(semi + 1));
        if (toks.size() < 2) throw ParseError("open(): need at least the two end values");
        std::vector<double> v;
        const double a = parse_number(toks.front());
        const double b = parse_number(toks.back());
        v.insert(v.end(), m, a);
        for (std::size_t i = 1; i + 1 < toks.size(); ++i) v.push_back(parse_number(toks[i]));
        v.insert(v.end(), m, b);
        return KnotVector(std::move(v));
    }
    if (auto args = generator_args("uniform")) {
        auto toks = split_list(*args);
        if (toks.size() != 3) throw ParseError("uniform(start, step, count) takes three arguments");
        const double start = parse_number(toks[0]);
        const double step = parse_number(toks[1]);
        const double cnt = parse_number(toks[2]);
        if (cnt < 2 || cnt != std::floor(cnt)) throw ParseError("uniform(): count must be an integer >= 2");
        std::vector<double> v(static_cast<std::size_t>(cnt));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = start + static_cast<double>(k) * step;
        return KnotVector(std::move(v));
    }

    auto toks = split_list(s);
    std::vector<double> v;
    v.reserve(toks.size());
    for (auto t : toks) v.push_back(parse_number(t));
    return KnotVector(std::move(v));
}

std::string format_knots(const KnotVector& knots) {
    std::string out;
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (i) out += ',';
        out += fmt::format("{:.17g}", knots[i]);
    }
    return out;
}

}  // namespace thsplines
