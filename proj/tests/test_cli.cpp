#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stack>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "thsplines/knots.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = thsplines::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Tags open and close in order; returns the number of <polyline> elements or -1.
int well_formed_polylines(const std::string& svg) {
    std::stack<std::string> open;
    int polylines = 0;
    std::size_t pos = 0;
    while ((pos = svg.find('<', pos)) != std::string::npos) {
        const std::size_t end = svg.find('>', pos);
        if (end == std::string::npos) return -1;
        std::string tag = svg.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        if (tag.starts_with('?') || tag.starts_with('!')) continue;
        const bool closing = tag.starts_with('/');
        const bool self = tag.ends_with('/');
        std::string name = tag.substr(closing ? 1 : 0);
        name = name.substr(0, name.find_first_of(" /\n\t"));
        if (name == "polyline") ++polylines;
        if (closing) {
            if (open.empty() || open.top() != name) return -1;
            open.pop();
        } else if (!self) {
            open.push(name);
        }
    }
    return open.empty() ? polylines : -1;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / fs::path("thsplines_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"weights", "--order", "5"}).code == 2);
    CHECK(run({"weights", "--order", "5", "--knots", "0,1,2,3,4,5", "--frobnicate"}).code == 2);
    CHECK(run({"circle", "--scale", "huge"}).code == 2);
}

TEST_CASE("help exits with 0") {
    const auto top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("cardinalities") != std::string::npos);
    const auto sub = run({"approx", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--orders") != std::string::npos);
}

TEST_CASE("domain errors exit with 1 and a one-line message") {
    const auto r = run({"weights", "--order", "4", "--knots", "0,1,2,3,4,5"});
    CHECK(r.code == 1);
    CHECK(r.err.starts_with("error: "));
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    CHECK(run({"approx", "--orders", "13"}).code == 1);
    CHECK(run({"cardinalities", "--n-max", "21"}).code == 1);
    CHECK(run({"weights", "--order", "3", "--knots", "0,1,x"}).code == 1);
}

TEST_CASE("weights subcommand") {
    const auto r = run({"weights", "--family", "trig", "--order", "5", "--knots", "0,0,0,0,0,0.5,1,2,2.5,3,3,3,3,3"});
    REQUIRE(r.code == 0);
    const auto rows = csv(r.out);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == std::vector<std::string>{"j", "w"});
    CHECK(rows[1][0] == "0");
    CHECK(std::stod(rows[1][1]) == 1.0);  // all-repeated inner window

    const auto checked = run({"weights", "--order", "7", "--knots", "open(7; 0, 0.3, 0.5, 1, 1.1, 2)", "--check"});
    REQUIRE(checked.code == 0);
    const auto crow = csv(checked.out);
    CHECK(crow[0] == std::vector<std::string>{"j", "w", "max_rel_dev"});
    for (std::size_t i = 1; i < crow.size(); ++i) CHECK(std::stod(crow[i][2]) <= 1e-12);
    CHECK(checked.err.find("max cross-strategy deviation") != std::string::npos);

    const auto hyp = run({"weights", "--family", "hyp", "--order", "5", "--knots", "uniform(0, 0.3, 9)", "--check",
                          "--strategy", "uniform"});
    REQUIRE(hyp.code == 0);
    for (std::size_t i = 1; i < csv(hyp.out).size(); ++i) CHECK(std::stod(csv(hyp.out)[i][2]) <= 1e-12);

    const auto js = run({"weights", "--order", "3", "--knots", "0,1,2,3,4", "--json"});
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["weights"].size() == 2);
    CHECK(j["weights"][0].get<double>() == doctest::Approx(std::cos(0.5)).epsilon(1e-15));
}

TEST_CASE("cardinalities table") {
    const auto r = run({"cardinalities", "--n-max", "10"});
    REQUIRE(r.code == 0);
    const auto rows = csv(r.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == std::vector<std::string>{"n", "Q", "Qhat", "S"});
    for (int n = 1; n <= 10; ++n) {
        CHECK(std::stoull(rows[n][1]) == oracle::factorial(2 * n));
        CHECK(std::stoull(rows[n][2]) == oracle::double_factorial(2 * n - 1));
        CHECK(std::stoull(rows[n][3]) == oracle::binomial(2 * n - 1, n - 1));
    }
    CHECK(csv(run({"cardinalities", "--n-max", "20"}).out)[20][1] == "815915283247897734345611269596115894272000000000");
}

TEST_CASE("basis tabulation") {
    const auto r = run({"basis", "--family", "hyp", "--order", "3", "--knots", "open(3; 0, 0.5, 1, 2, 2.5, 3)",
                        "--samples", "7"});
    REQUIRE(r.code == 0);
    const auto rows = csv(r.out);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].size() == 8);
    CHECK(rows[0][1] == "N_0");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double sum = 0.0;
        for (std::size_t c = 1; c < rows[i].size(); ++c) sum += std::stod(rows[i][c]);
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("file outputs") {
    TempDir dir;
    const std::string svg = dir / "circle.svg";
    const std::string knots = dir / "knots.txt";
    const auto r = run({"circle", "--order", "7", "--sides", "8", "--svg", svg, "--knots-out", knots});
    REQUIRE(r.code == 0);
    CHECK(well_formed_polylines(slurp(svg)) == 2);
    CHECK(run({"circle", "--order", "7", "--sides", "8", "--svg", svg}).code == 1);
    CHECK(run({"circle", "--order", "7", "--sides", "8", "--svg", svg, "--force"}).code == 0);

    // knots written by one subcommand are read by the others
    const auto k = thsplines::parse_knots(slurp(knots));
    CHECK(k.size() == 8 + 12 + 1);
    CHECK(run({"basis", "--order", "7", "--knots", knots, "--samples", "5"}).code == 0);
    const auto w = run({"weights", "--order", "7", "--knots", knots, "--check"});
    REQUIRE(w.code == 0);

    const std::string out = dir / "weights.csv";
    CHECK(run({"weights", "--order", "7", "--knots", knots, "--out", out}).code == 0);
    CHECK(slurp(out) == run({"weights", "--order", "7", "--knots", knots}).out);
    CHECK(run({"weights", "--order", "7", "--knots", knots, "--out", out}).code == 1);

    const std::string bsvg = dir / "basis.svg";
    CHECK(run({"basis", "--order", "5", "--knots", "open(5; 0, 1, 2, 3)", "--svg", bsvg}).code == 0);
    CHECK(well_formed_polylines(slurp(bsvg)) == 7);

    const std::string csvg = dir / "card.svg";
    CHECK(run({"cardinalities", "--svg", csvg}).code == 0);
    CHECK(well_formed_polylines(slurp(csvg)) == 3);

    const std::string asvg = dir / "approx.svg";
    CHECK(run({"approx", "--orders", "3,5", "--levels", "2", "--svg", asvg, "--samples", "2001"}).code == 0);
    CHECK(well_formed_polylines(slurp(asvg)) == 2);

    // refined knots from insert feed back into insert
    const std::string refined = dir / "refined.txt";
    const auto ins = run({"insert", "--order", "3", "--knots", "0,1,2,3,4,5,6", "--control", "0,0;1,2;2,0;3,1", "--at",
                          "2.5", "--knots-out", refined});
    REQUIRE(ins.code == 0);
    std::ofstream(dir / "control.csv") << ins.out;
    const auto again = run({"insert", "--order", "3", "--knots", refined, "--control", dir / "control.csv", "--at", "3.5"});
    CHECK(again.code == 0);
    CHECK(csv(again.out).size() == 1 + 6);
}

TEST_CASE("circle output") {
    const auto r = run({"circle", "--order", "5", "--sides", "8", "--theta", "pi/8", "--segment", "1", "7", "--samples",
                        "50"});
    REQUIRE(r.code == 0);
    const auto rows = csv(r.out);
    CHECK(rows[0] == std::vector<std::string>{"kind", "param", "x", "y"});
    int control = 0, curve = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][0] == "control") ++control;
        if (rows[i][0] == "curve") {
            ++curve;
            CHECK(std::hypot(std::stod(rows[i][2]), std::stod(rows[i][3])) ==
                  doctest::Approx(2 * std::sqrt(2.0) / 3).epsilon(1e-12));
        }
    }
    CHECK(control == 10);
    CHECK(curve == 50);
    const auto unit = run({"circle", "--order", "7", "--sides", "8", "--scale", "unit", "--json"});
    REQUIRE(unit.code == 0);
    const auto j = nlohmann::json::parse(unit.out);
    for (const auto& p : j["curve"]) {
        CHECK(std::hypot(p[1].get<double>(), p[2].get<double>()) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("insert methods agree") {
    const std::vector<std::string> base{"insert", "--family", "hyp", "--order", "5", "--knots", "open(5; 0, 1, 2, 3)",
                                        "--control", "0,0;1,2;2,0;3,1;4,4;5,0;6,1", "--at", "1.5", "--at", "pi/2"};
    auto coll = base;
    coll.insert(coll.end(), {"--method", "collocation"});
    const auto a = csv(run(base).out), b = csv(run(coll).out);
    REQUIRE(a.size() == 10);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 1; i < a.size(); ++i) {
        for (std::size_t c = 1; c < 3; ++c) CHECK(std::abs(std::stod(a[i][c]) - std::stod(b[i][c])) <= 1e-9);
    }
    CHECK(run({"insert", "--order", "3", "--knots", "0,1,2,3,4", "--control", "0,0;1,1", "--at", "1.5"}).code == 1);
}

TEST_CASE("approx table") {
    const auto r = run({"approx", "--family", "trig", "--orders", "3,5", "--levels", "4"});
    REQUIRE(r.code == 0);
    const auto rows = csv(r.out);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == std::vector<std::string>{"family", "m", "level", "p", "ndof", "linf_error", "rate", "at_floor"});
    CHECK(rows[1][6].empty());
    CHECK(std::abs(std::stod(rows[4][6]) - 3) <= 0.7);
    CHECK(std::abs(std::stod(rows[8][6]) - 5) <= 0.7);
    CHECK(rows[8][4] == "324");
    CHECK(r.err.find(" s\n") != std::string::npos);
}

TEST_CASE("identical invocations give identical bytes") {
    const std::vector<std::vector<std::string>> cmds{
        {"weights", "--order", "9", "--knots", "open(9; 0, 0.4, 0.5, 1.3, 2)", "--check"},
        {"basis", "--order", "7", "--knots", "uniform(0, 0.2, 20)", "--samples", "333"},
        {"circle", "--order", "5", "--sides", "12"},
        {"approx", "--family", "both", "--orders", "3", "--levels", "3", "--samples", "3001"},
    };
    for (const auto& c : cmds) {
        const auto a = run(c), b = run(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
