#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "thsplines/approx.hpp"
#include "thsplines/basis.hpp"
#include "thsplines/curves.hpp"
#include "thsplines/error.hpp"
#include "thsplines/knots.hpp"
#include "thsplines/svg.hpp"
#include "thsplines/weights.hpp"

namespace thsplines::cli {
namespace {

using nlohmann::json;

std::string num(double v) { return fmt::format("{:.17g}", v); }
std::string human(double v) { return fmt::format("{:.6g}", v); }

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw ParseError("cannot read '" + p.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// An argument that is either a path to an existing file or inline text.
std::string file_or_inline(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
    return arg;
}

void write_output(const std::string& path, const std::string& content, bool force) {
    if (std::filesystem::exists(path) && !force) {
        throw DomainError("refusing to overwrite existing file '" + path + "' (use --force)");
    }
    std::ofstream o(path, std::ios::trunc);
    if (!o) throw DomainError("cannot write '" + path + "'");
    o << content;
}

/// Rows of numbers; lines that do not parse as numbers (headers) are skipped
/// only before the first data row.
std::vector<std::vector<double>> parse_rows(const std::string& text, char row_sep) {
    std::vector<std::vector<double>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line, row_sep)) {
        std::vector<double> row;
        std::string cell;
        bool ok = true;
        std::string norm = line;
        std::replace(norm.begin(), norm.end(), '\t', ',');
        std::stringstream ls(norm);
        while (std::getline(ls, cell, ',')) {
            std::stringstream cs(cell);
            std::string tok;
            while (cs >> tok) {
                try {
                    row.push_back(parse_number(tok));
                } catch (const ParseError&) {
                    ok = false;
                }
            }
        }
        if (row.empty() && ok) continue;
        if (!ok) {
            if (rows.empty()) continue;
            throw ParseError("malformed numeric row '" + line + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Point> parse_control_points(const std::string& arg) {
    std::error_code ec;
    const bool is_file = std::filesystem::is_regular_file(arg, ec);
    auto rows = parse_rows(is_file ? read_file(arg) : arg, is_file ? '\n' : ';');
    if (rows.empty()) throw ParseError("no control points given");
    return rows;
}

struct Common {
    std::string out_path;
    bool force = false;
    bool json = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out_path, "Write the main output to this file instead of stdout");
    cmd->add_flag("--force", c.force, "Overwrite existing output files");
    cmd->add_flag("--json", c.json, "Emit JSON instead of CSV");
}

void emit(const Common& c, const std::string& content, std::ostream& out) {
    if (c.out_path.empty()) {
        out << content;
    } else {
        write_output(c.out_path, content, c.force);
    }
}

// weights ---------------------------------------------------------------------

struct WeightsOpts {
    std::string family = "trig";
    int order = 0;
    std::string knots;
    std::string strategy = "auto";
    bool check = false;
};

int run_weights(const WeightsOpts& o, const Common& c, std::ostream& out, std::ostream& err) {
    const BasisSpec spec(parse_family(o.family), o.order, parse_knots(file_or_inline(o.knots)));
    const ValidationReport rep = validate(spec);
    for (const auto& w : rep.warnings) err << "warning: " << w << '\n';
    const WeightSet ws = compute_weights(spec, parse_strategy(o.strategy));

    std::vector<double> dev(ws.size(), 0.0);
    std::vector<std::string> used_checks;
    if (o.check) {
        const int n = spec.half_degree();
        for (std::size_t j = 0; j < ws.size(); ++j) {
            const double ref = weight_signvector(spec, j);
            auto track = [&](double v) {
                dev[j] = std::max(dev[j], std::abs(v - ref) / std::max(1.0, std::abs(ref)));
            };
            track(ws[j]);
            if (n <= kMaxHalfDegreeQ) track(weight_bruteforce_q(spec, j));
            if (n <= kMaxHalfDegreeQhat) track(weight_pruned_qhat(spec, j));
            const auto h = is_uniform(spec.knots(), j, spec.order());
            if (h) track(weight_uniform(spec.family(), n, *h));
            if (spec.family() == Family::Trigonometric) {
                track(weight_integral_check(spec, j));
                if (h) track(weight_walz_check(n, *h).value);
            }
        }
        used_checks = {"s"};
        if (n <= kMaxHalfDegreeQ) used_checks.push_back("q");
        if (n <= kMaxHalfDegreeQhat) used_checks.push_back("qhat");
        used_checks.push_back("uniform(where uniform)");
        if (spec.family() == Family::Trigonometric) {
            used_checks.push_back("integral");
            used_checks.push_back("walz(where uniform)");
        }
    }
    const double max_dev = dev.empty() ? 0.0 : *std::max_element(dev.begin(), dev.end());

    std::string body;
    if (c.json) {
        json j;
        j["family"] = std::string(to_string(spec.family()));
        j["order"] = spec.order();
        j["knots"] = std::vector<double>(spec.knots().values().begin(), spec.knots().values().end());
        j["strategy"] = o.strategy;
        j["weights"] = ws.weights;
        if (o.check) {
            j["deviation"] = dev;
            j["max_deviation"] = max_dev;
        }
        body = j.dump(2) + "\n";
    } else {
        body = o.check ? "j,w,max_rel_dev\n" : "j,w\n";
        for (std::size_t j = 0; j < ws.size(); ++j) {
            body += std::to_string(j) + "," + num(ws[j]);
            if (o.check) body += "," + num(dev[j]);
            body += '\n';
        }
    }
    emit(c, body, out);
    if (o.check) {
        std::string names;
        for (const auto& s : used_checks) names += (names.empty() ? "" : ",") + s;
        err << "max cross-strategy deviation: " << human(max_dev) << " (" << names << ")\n";
    }
    return kExitOk;
}

// cardinalities -----------------------------------------------------------------

int run_cardinalities(int n_max, const std::string& svg, const Common& c, std::ostream& out) {
    if (n_max < 1 || n_max > kMaxHalfDegreeCardinality) {
        throw DomainError("--n-max must be in 1.." + std::to_string(kMaxHalfDegreeCardinality));
    }
    std::string body;
    json rows = json::array();
    std::vector<double> ns, lq, lqh, ls;
    if (!c.json) body = "n,Q,Qhat,S\n";
    for (int n = 1; n <= n_max; ++n) {
        const Cardinalities k = cardinalities(n);
        if (c.json) {
            rows.push_back({{"n", n}, {"Q", k.q.str()}, {"Qhat", k.qhat.str()}, {"S", k.s.str()}});
        } else {
            body += fmt::format("{},{},{},{}\n", n, k.q.str(), k.qhat.str(), k.s.str());
        }
        ns.push_back(n);
        lq.push_back(std::log10(k.q.convert_to<double>()));
        lqh.push_back(std::log10(k.qhat.convert_to<double>()));
        ls.push_back(std::log10(k.s.convert_to<double>()));
    }
    if (c.json) body = rows.dump(2) + "\n";
    emit(c, body, out);
    if (!svg.empty()) {
        SvgPlot plot;
        plot.set_title("Cardinality of Q_n, Qhat_n, S_n");
        plot.set_labels("n", "log10(cardinality)");
        plot.add_line(ns, lq, palette(0), "Q_n");
        plot.add_line(ns, lqh, palette(1), "Qhat_n");
        plot.add_line(ns, ls, palette(2), "S_n");
        write_output(svg, plot.render(), c.force);
    }
    return kExitOk;
}

// basis -------------------------------------------------------------------------

struct BasisOpts {
    std::string family = "trig";
    int order = 0;
    std::string knots;
    std::size_t samples = 201;
    std::string svg;
};

int run_basis(const BasisOpts& o, const Common& c, std::ostream& out, std::ostream& err) {
    const BasisSpec spec(parse_family(o.family), o.order, parse_knots(file_or_inline(o.knots)));
    const ValidationReport rep = validate(spec);
    for (const auto& w : rep.warnings) err << "warning: " << w << '\n';
    enforce(rep, EnforcementLevel::None);
    const WeightSet ws = compute_weights(spec);
    const std::vector<double> xs = domain_samples(spec, o.samples);
    const BasisTable table = tabulate_basis(spec, ws, xs);

    std::string body;
    if (c.json) {
        json j;
        j["family"] = std::string(to_string(spec.family()));
        j["order"] = spec.order();
        j["knots"] = std::vector<double>(spec.knots().values().begin(), spec.knots().values().end());
        j["weights"] = ws.weights;
        j["x"] = xs;
        json vals = json::array();
        for (std::size_t i = 0; i < table.rows; ++i) {
            vals.push_back(std::vector<double>(table.values.begin() + static_cast<std::ptrdiff_t>(i * table.cols),
                                               table.values.begin() + static_cast<std::ptrdiff_t>((i + 1) * table.cols)));
        }
        j["values"] = vals;
        body = j.dump(2) + "\n";
    } else {
        body = "x";
        for (std::size_t j = 0; j < table.cols; ++j) body += ",N_" + std::to_string(j);
        body += '\n';
        for (std::size_t i = 0; i < table.rows; ++i) {
            body += num(xs[i]);
            for (std::size_t j = 0; j < table.cols; ++j) body += "," + num(table(i, j));
            body += '\n';
        }
    }
    emit(c, body, out);

    if (!o.svg.empty()) {
        SvgPlot plot;
        plot.set_title(fmt::format("Normalized {} B-splines, m = {}",
                                   spec.family() == Family::Trigonometric ? "trigonometric" : "hyperbolic", spec.order()));
        plot.set_labels("x", "N_j(x)");
        std::vector<double> col(table.rows);
        for (std::size_t j = 0; j < table.cols; ++j) {
            for (std::size_t i = 0; i < table.rows; ++i) col[i] = table(i, j);
            plot.add_line(xs, col, palette(j));
        }
        write_output(o.svg, plot.render(), c.force);
    }
    return kExitOk;
}

// circle ------------------------------------------------------------------------

struct CircleOpts {
    int order = 3;
    int sides = 4;
    std::string theta;
    std::vector<int> segment;
    std::size_t samples = 361;
    std::string scale = "polygon";
    std::string svg;
    std::string knots_out;
};

int run_circle(const CircleOpts& o, const Common& c, std::ostream& out, std::ostream& err) {
    CircleSpec cs;
    cs.order = o.order;
    cs.sides = o.sides;
    if (!o.theta.empty()) cs.theta = parse_number(o.theta);
    if (!o.segment.empty()) cs.segment = std::pair{o.segment[0], o.segment[1]};
    if (o.scale == "unit") {
        cs.scale = CircleScale::Unit;
    } else if (o.scale != "polygon") {
        throw ParseError("--scale must be polygon or unit");
    }
    const CurveModel curve = cs.segment ? make_circle_segment(cs) : make_circle(cs);
    const double radius = cs.scale == CircleScale::Unit ? 1.0 : circle_radius(cs.order, cs.sides);
    for (const auto& w : curve.validation().warnings) err << "note: " << w << '\n';
    err << "circle radius " << human(radius) << ", " << curve.control_points().size() << " control points\n";

    const std::vector<double> xs = domain_samples(curve.spec(), o.samples);
    std::vector<Point> pts;
    pts.reserve(xs.size());
    for (double x : xs) pts.push_back(eval_curve(curve, x));

    std::string body;
    if (c.json) {
        json j;
        j["order"] = cs.order;
        j["sides"] = cs.sides;
        j["theta"] = cs.theta.value_or(std::numbers::pi / cs.sides);
        j["radius"] = radius;
        j["knots"] = std::vector<double>(curve.spec().knots().values().begin(), curve.spec().knots().values().end());
        j["weights"] = curve.weights().weights;
        j["control_points"] = curve.control_points();
        json cv = json::array();
        for (std::size_t i = 0; i < xs.size(); ++i) cv.push_back({xs[i], pts[i][0], pts[i][1]});
        j["curve"] = cv;
        body = j.dump(2) + "\n";
    } else {
        body = "kind,param,x,y\n";
        for (std::size_t j = 0; j < curve.control_points().size(); ++j) {
            const auto& p = curve.control_points()[j];
            body += fmt::format("control,{},{},{}\n", j + 1, num(p[0]), num(p[1]));
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            body += fmt::format("curve,{},{},{}\n", num(xs[i]), num(pts[i][0]), num(pts[i][1]));
        }
    }
    emit(c, body, out);
    if (!o.knots_out.empty()) write_output(o.knots_out, format_knots(curve.spec().knots()) + "\n", c.force);

    if (!o.svg.empty()) {
        SvgPlot plot(560, 560);
        plot.set_equal_aspect(true);
        plot.set_title(fmt::format("m = {}, p = {}", cs.order, cs.sides));
        std::vector<double> px, py, cx, cy;
        for (const auto& p : curve.control_points()) {
            px.push_back(p[0]);
            py.push_back(p[1]);
        }
        for (const auto& p : pts) {
            cx.push_back(p[0]);
            cy.push_back(p[1]);
        }
        plot.add_line(px, py, "#777777", "control polygon", true);
        plot.add_line(cx, cy, palette(0), "curve");
        plot.add_stars(px, py, palette(1), "control points");
        write_output(o.svg, plot.render(), c.force);
    }
    return kExitOk;
}

// insert ------------------------------------------------------------------------

struct InsertOpts {
    std::string family = "trig";
    int order = 0;
    std::string knots;
    std::string control;
    std::vector<std::string> at;
    std::string method = "boehm";
    std::string knots_out;
};

int run_insert(const InsertOpts& o, const Common& c, std::ostream& out, std::ostream& err) {
    const BasisSpec spec(parse_family(o.family), o.order, parse_knots(file_or_inline(o.knots)));
    const ValidationReport rep = validate(spec);
    for (const auto& w : rep.warnings) err << "warning: " << w << '\n';
    CurveModel curve(spec, parse_control_points(o.control), EnforcementLevel::PositiveWeights);
    if (o.method != "boehm" && o.method != "collocation") throw ParseError("--method must be boehm or collocation");
    for (const auto& a : o.at) {
        const double x = parse_number(a);
        curve = o.method == "boehm" ? insert_knot(curve, x) : insert_knot_by_collocation(curve, x);
    }

    std::string body;
    if (c.json) {
        json j;
        j["family"] = std::string(to_string(spec.family()));
        j["order"] = spec.order();
        j["knots"] = std::vector<double>(curve.spec().knots().values().begin(), curve.spec().knots().values().end());
        j["weights"] = curve.weights().weights;
        j["control_points"] = curve.control_points();
        body = j.dump(2) + "\n";
    } else {
        body = "j";
        for (std::size_t k = 0; k < curve.dimension(); ++k) body += ",c" + std::to_string(k);
        body += '\n';
        for (std::size_t j = 0; j < curve.control_points().size(); ++j) {
            body += std::to_string(j);
            for (double v : curve.control_points()[j]) body += "," + num(v);
            body += '\n';
        }
    }
    emit(c, body, out);
    if (!o.knots_out.empty()) {
        write_output(o.knots_out, format_knots(curve.spec().knots()) + "\n", c.force);
    } else {
        err << "knots: " << format_knots(curve.spec().knots()) << '\n';
    }
    return kExitOk;
}

// approx ------------------------------------------------------------------------

struct ApproxOpts {
    std::string family = "trig";
    std::string orders = "3,5,7";
    int levels = 5;
    std::string target = "builtin";
    std::size_t samples = 10001;
    bool full = false;
    std::string svg;
};

int run_approx(const ApproxOpts& o, const Common& c, std::ostream& out, std::ostream& err) {
    std::vector<Family> families;
    if (o.family == "both") {
        families = {Family::Trigonometric, Family::Hyperbolic};
    } else {
        families = {parse_family(o.family)};
    }
    std::vector<int> orders;
    for (const auto& row : parse_rows(o.orders, ';')) {
        for (double v : row) {
            if (v != std::floor(v)) throw ParseError("--orders must be integers");
            orders.push_back(static_cast<int>(v));
        }
    }
    if (orders.empty()) throw ParseError("--orders is empty");
    for (int m : orders) {
        if (m > 11 && !o.full) throw DomainError("orders above 11 need --full (runtime guard)");
    }
    if (o.levels < 1 || o.levels > 5 + (o.full ? 1 : 0)) {
        throw DomainError("--levels must be in 1..5 (1..6 with --full)");
    }

    std::vector<double> xs, fs;
    if (o.target == "builtin") {
        xs = fit_grid(o.samples);
        fs.reserve(xs.size());
        for (double x : xs) fs.push_back(builtin_target(x));
    } else {
        for (const auto& row : parse_rows(read_file(o.target), '\n')) {
            if (row.size() < 2) throw ParseError("target file rows need two columns (x, f)");
            xs.push_back(row[0]);
            fs.push_back(row[1]);
        }
    }

    std::vector<ConvergenceRow> rows;
    double runtime = 0.0;
    for (Family f : families) {
        auto part = convergence_study(f, orders, o.levels, xs, fs);
        for (const auto& r : part) runtime += r.runtime_seconds;
        rows.insert(rows.end(), part.begin(), part.end());
    }

    std::string body;
    if (c.json) {
        json arr = json::array();
        for (const auto& r : rows) {
            json j = {{"family", std::string(to_string(r.family))},
                      {"m", r.order},
                      {"level", r.level},
                      {"p", r.p},
                      {"ndof", r.ndof},
                      {"linf_error", r.linf_error},
                      {"at_floor", r.at_floor}};
            j["rate"] = r.rate ? json(*r.rate) : json(nullptr);
            arr.push_back(j);
        }
        body = arr.dump(2) + "\n";
    } else {
        body = "family,m,level,p,ndof,linf_error,rate,at_floor\n";
        for (const auto& r : rows) {
            body += fmt::format("{},{},{},{},{},{},{},{}\n", to_string(r.family), r.order, r.level, r.p, r.ndof,
                                num(r.linf_error), r.rate ? num(*r.rate) : "", r.at_floor ? 1 : 0);
        }
    }
    emit(c, body, out);
    err << rows.size() << " fits in " << human(runtime) << " s\n";

    if (!o.svg.empty()) {
        SvgPlot plot;
        plot.set_log_log(true);
        plot.set_title("L-infinity error of least-squares fits");
        plot.set_labels("NDOF", "error");
        std::size_t k = 0;
        for (Family f : families) {
            for (int m : orders) {
                std::vector<double> nd, er;
                for (const auto& r : rows) {
                    if (r.family == f && r.order == m) {
                        nd.push_back(static_cast<double>(r.ndof));
                        er.push_back(r.linf_error);
                    }
                }
                plot.add_line(nd, er, palette(k++), fmt::format("{} m={}", to_string(f), m),
                              f == Family::Hyperbolic && families.size() > 1);
            }
        }
        write_output(o.svg, plot.render(), c.force);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normalized trigonometric and hyperbolic B-splines", "thsplines"};
    app.require_subcommand(1);
    app.fallthrough(false);

    Common common;

    WeightsOpts wo;
    auto* weights = app.add_subcommand("weights", "Normalization weights w_{j,m} as CSV (j,w)");
    weights->add_option("--family", wo.family, "trig | hyp")->check(CLI::IsMember({"trig", "hyp"}));
    weights->add_option("--order", wo.order, "Odd order m = 2n+1")->required();
    weights->add_option("--knots", wo.knots, "Knot file or inline list/generator")->required();
    weights->add_option("--strategy", wo.strategy, "auto | q | qhat | s | uniform")
        ->check(CLI::IsMember({"auto", "q", "qhat", "s", "uniform"}));
    weights->add_flag("--check", wo.check, "Cross-check every applicable strategy and report the max deviation");
    add_common(weights, common);

    int n_max = 10;
    std::string card_svg;
    auto* card = app.add_subcommand("cardinalities", "Sizes of Q_n, Qhat_n and S_n");
    card->add_option("--n-max", n_max, "Largest n (<= 20)");
    card->add_option("--svg", card_svg, "Write a growth plot");
    add_common(card, common);

    BasisOpts bo;
    auto* basis = app.add_subcommand("basis", "Tabulate normalized B-splines as CSV (x,N_0,...)");
    basis->add_option("--family", bo.family, "trig | hyp")->check(CLI::IsMember({"trig", "hyp"}));
    basis->add_option("--order", bo.order, "Odd order m = 2n+1")->required();
    basis->add_option("--knots", bo.knots, "Knot file or inline list/generator")->required();
    basis->add_option("--samples", bo.samples, "Number of equispaced samples over the domain")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
    basis->add_option("--svg", bo.svg, "Write a line plot of the basis");
    add_common(basis, common);

    CircleOpts co;
    auto* circle = app.add_subcommand("circle", "Exact circle (or circle segment) as a normalized trig B-spline curve");
    circle->add_option("--order", co.order, "Odd order m >= 3");
    circle->add_option("--sides", co.sides, "Polygon sides p >= m");
    circle->add_option("--theta", co.theta, "Phase (default pi/p); accepts pi/8 syntax");
    circle->add_option("--segment", co.segment, "Restrict to [2a pi/p, 2b pi/p)")->expected(2);
    circle->add_option("--samples", co.samples, "Curve samples")->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
    circle->add_option("--scale", co.scale, "polygon (regular p-gon control points) | unit (curve is the unit circle)")
        ->check(CLI::IsMember({"polygon", "unit"}));
    circle->add_option("--svg", co.svg, "Write polygon, control points and curve");
    circle->add_option("--knots-out", co.knots_out, "Write the knot vector to this file");
    add_common(circle, common);

    InsertOpts io;
    auto* insert = app.add_subcommand("insert", "Knot insertion on a normalized B-spline curve");
    insert->add_option("--family", io.family, "trig | hyp")->check(CLI::IsMember({"trig", "hyp"}));
    insert->add_option("--order", io.order, "Odd order m = 2n+1")->required();
    insert->add_option("--knots", io.knots, "Knot file or inline list/generator")->required();
    insert->add_option("--control", io.control, "Control point file (one point per line) or inline 'x,y; x,y; ...'")
        ->required();
    insert->add_option("--at", io.at, "Knot value to insert (repeatable)")->required();
    insert->add_option("--method", io.method, "boehm | collocation")->check(CLI::IsMember({"boehm", "collocation"}));
    insert->add_option("--knots-out", io.knots_out, "Write the refined knot vector to this file");
    add_common(insert, common);

    ApproxOpts ao;
    auto* approx = app.add_subcommand("approx", "Least-squares convergence study as CSV");
    approx->add_option("--family", ao.family, "trig | hyp | both")->check(CLI::IsMember({"trig", "hyp", "both"}));
    approx->add_option("--orders", ao.orders, "Comma-separated odd orders");
    approx->add_option("--levels", ao.levels, "Levels l = 1..L, p = 2^(l+1)");
    approx->add_option("--target", ao.target, "builtin or a two-column CSV file (x,f)");
    approx->add_option("--samples", ao.samples, "Samples for the builtin target")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
    approx->add_flag("--full", ao.full, "Allow orders 13 and 15 and a sixth level");
    approx->add_option("--svg", ao.svg, "Write a log-log error plot");
    add_common(approx, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kExitUsage;
    }

    try {
        if (weights->parsed()) return run_weights(wo, common, out, err);
        if (card->parsed()) return run_cardinalities(n_max, card_svg, common, out);
        if (basis->parsed()) return run_basis(bo, common, out, err);
        if (circle->parsed()) return run_circle(co, common, out, err);
        if (insert->parsed()) return run_insert(io, common, out, err);
        if (approx->parsed()) return run_approx(ao, common, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace thsplines::cli
