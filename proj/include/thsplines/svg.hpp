#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace thsplines {

/// Minimal static line plot: polylines and star markers over linear or
/// log-log axes, serialized as a standalone SVG document.
class SvgPlot {
public:
    SvgPlot(double width = 640, double height = 480) : width_(width), height_(height) {}

    void set_title(std::string title) { title_ = std::move(title); }
    void set_labels(std::string x, std::string y) {
        xlabel_ = std::move(x);
        ylabel_ = std::move(y);
    }
    void set_log_log(bool on) { log_log_ = on; }
    /// Same data scale on both axes (circles stay round).
    void set_equal_aspect(bool on) { equal_aspect_ = on; }

    void add_line(std::span<const double> x, std::span<const double> y, std::string color, std::string label = {},
                  bool dashed = false);
    void add_stars(std::span<const double> x, std::span<const double> y, std::string color, std::string label = {});

    [[nodiscard]] std::size_t polyline_count() const noexcept;
    [[nodiscard]] std::string render() const;

private:
    struct Series {
        std::vector<double> x, y;
        std::string color, label;
        bool stars = false;
        bool dashed = false;
    };

    double width_, height_;
    std::string title_, xlabel_, ylabel_;
    bool log_log_ = false;
    bool equal_aspect_ = false;
    std::vector<Series> series_;
};

/// A qualitative palette cycled by plot callers.
[[nodiscard]] const std::string& palette(std::size_t i);

}  // namespace thsplines
