#include "thsplines/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "thsplines/error.hpp"

namespace thsplines {
namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!(hi > lo)) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
};

}  // namespace

const std::string& palette(std::size_t i) {
    static const std::array<std::string, 8> colors = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                      "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    return colors[i % colors.size()];
}

void SvgPlot::add_line(std::span<const double> x, std::span<const double> y, std::string color, std::string label,
                       bool dashed) {
    if (x.size() != y.size()) throw DomainError("plot series needs equally long x and y");
    series_.push_back({{x.begin(), x.end()}, {y.begin(), y.end()}, std::move(color), std::move(label), false, dashed});
}

void SvgPlot::add_stars(std::span<const double> x, std::span<const double> y, std::string color, std::string label) {
    if (x.size() != y.size()) throw DomainError("plot series needs equally long x and y");
    series_.push_back({{x.begin(), x.end()}, {y.begin(), y.end()}, std::move(color), std::move(label), true, false});
}

std::size_t SvgPlot::polyline_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(series_.begin(), series_.end(), [](const Series& s) { return !s.stars; }));
}

std::string SvgPlot::render() const {
    auto tx = [&](double v) { return log_log_ ? std::log10(v) : v; };
    Range xr, yr;
    for (const auto& s : series_) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (log_log_ && (s.x[i] <= 0 || s.y[i] <= 0)) continue;
            xr.add(tx(s.x[i]));
            yr.add(tx(s.y[i]));
        }
    }
    xr.pad();
    yr.pad();

    const double left = 70, right = 20, top = title_.empty() ? 20 : 40, bottom = 50;
    double pw = width_ - left - right;
    double ph = height_ - top - bottom;
    double sx = pw / (xr.hi - xr.lo);
    double sy = ph / (yr.hi - yr.lo);
    if (equal_aspect_) {
        sx = sy = std::min(sx, sy);
    }
    auto px = [&](double v) { return left + (tx(v) - xr.lo) * sx; };
    auto py = [&](double v) { return top + ph - (tx(v) - yr.lo) * sy; };

    std::string out = fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        width_, height_);
    if (!title_.empty()) {
        out += fmt::format("<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n", width_ / 2,
                           escape(title_));
    }
    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", left,
                       top, pw, ph);

    // ticks: 5 per axis in the transformed coordinate
    for (int i = 0; i <= 4; ++i) {
        const double u = xr.lo + (xr.hi - xr.lo) * i / 4;
        const double v = yr.lo + (yr.hi - yr.lo) * i / 4;
        const double X = left + (u - xr.lo) * sx;
        const double Y = top + ph - (v - yr.lo) * sy;
        const std::string xl = log_log_ ? fmt::format("1e{:.1f}", u) : fmt::format("{:.3g}", u);
        const std::string yl = log_log_ ? fmt::format("1e{:.1f}", v) : fmt::format("{:.3g}", v);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" font-size=\"11\">{}</text>\n", X,
                           top + ph + 16, xl);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\" font-size=\"11\">{}</text>\n", left - 6,
                           Y + 4, yl);
    }
    if (!xlabel_.empty()) {
        out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"13\">{}</text>\n",
                           left + pw / 2, height_ - 12, escape(xlabel_));
    }
    if (!ylabel_.empty()) {
        out += fmt::format(
            "<text x=\"16\" y=\"{0}\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 {0})\">{1}</text>\n",
            top + ph / 2, escape(ylabel_));
    }

    std::size_t legend_row = 0;
    for (const auto& s : series_) {
        if (s.stars) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (log_log_ && (s.x[i] <= 0 || s.y[i] <= 0)) continue;
                std::string pts;
                for (int k = 0; k < 10; ++k) {
                    const double rad = k % 2 == 0 ? 7.0 : 3.0;
                    const double ang = -std::numbers::pi / 2 + k * std::numbers::pi / 5;
                    pts += fmt::format("{:.2f},{:.2f} ", px(s.x[i]) + rad * std::cos(ang), py(s.y[i]) + rad * std::sin(ang));
                }
                out += fmt::format("<polygon points=\"{}\" fill=\"{}\"/>\n", pts, s.color);
            }
        } else {
            std::string pts;
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (log_log_ && (s.x[i] <= 0 || s.y[i] <= 0)) continue;
                pts += fmt::format("{:.2f},{:.2f} ", px(s.x[i]), py(s.y[i]));
            }
            out += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{}/>\n", pts,
                               s.color, s.dashed ? " stroke-dasharray=\"5,4\"" : "");
        }
        if (!s.label.empty()) {
            const double ly = top + 14 + 16 * static_cast<double>(legend_row++);
            out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"11\" fill=\"{}\">{}</text>\n",
                               left + pw - 110, ly, s.color, escape(s.label));
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace thsplines
