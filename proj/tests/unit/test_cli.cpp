#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "cli/cli.hpp"

namespace fb = fracbateman;
namespace cli = fracbateman::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

class TempDir {
public:
    TempDir() : path_(std::filesystem::temp_directory_path() / ("fracbateman_cli_" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name, const std::string& content = "") const {
        const auto p = path_ / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST(CliConfig, EmptyFileGivesDefaults) {
    const auto cfg = cli::parse_config("");
    EXPECT_EQ(cfg.params.mass, 1.0);
    EXPECT_EQ(cfg.params.omega, 1.0);
    EXPECT_EQ(cfg.params.hbar, 1.0);
    EXPECT_EQ(cfg.params.damping, 0.0);
    EXPECT_EQ(cfg.params.alpha(), 1.0);
    EXPECT_EQ(cfg.y.min, 1e-3);
    EXPECT_EQ(cfg.y.max, 8.0);
    EXPECT_EQ(cfg.y.count, 800u);
    EXPECT_EQ(cfg.t.min, 1e-3);
    EXPECT_EQ(cfg.t.max, 5.0);
    EXPECT_EQ(cfg.t.count, 50u);
    EXPECT_EQ(cfg.format, cli::OutputFormat::csv);
    EXPECT_EQ(cfg.mode, fb::KineticMode::derived);
}

TEST(CliConfig, SingleKeyOverridesOnlyThatKey) {
    const auto cfg = cli::parse_config("alpha = 0.8\n");
    EXPECT_EQ(cfg.params.alpha(), 0.8);
    EXPECT_EQ(cfg.params.damping, 0.0);
    EXPECT_EQ(cfg.y.count, 800u);
}

TEST(CliConfig, OutOfRangeAlphaNamesConstraint) {
    try {
        cli::parse_config("# header\n\nalpha = 1.5\n");
        FAIL();
    } catch (const cli::ConfigError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_NE(std::string(e.what()).find("0 < alpha <= 1"), std::string::npos);
    }
}

TEST(CliConfig, ErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) {
        try {
            cli::parse_config(text);
        } catch (const cli::ConfigError& e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("alpha = 0.9\nbogus = 1\n"), 2);
    EXPECT_EQ(line_of("alpha 0.9\n"), 1);
    EXPECT_EQ(line_of("mass = -1\n"), 1);
    EXPECT_EQ(line_of("\n\ny = 1,2\n"), 3);
    EXPECT_EQ(line_of("n = two\n"), 1);
    EXPECT_EQ(line_of("mode = sideways\n"), 1);
}

TEST(CliConfig, CommentsAndWhitespace) {
    const auto cfg = cli::parse_config("  lambda=0.25   # damping\r\n# y = 1,2,3\nt = 0.5, 2, 9\n");
    EXPECT_EQ(cfg.params.damping, 0.25);
    EXPECT_EQ(cfg.y.count, 800u);
    EXPECT_EQ(cfg.t.min, 0.5);
    EXPECT_EQ(cfg.t.count, 9u);
}

TEST(CliConfig, RangeParsing) {
    const auto r = cli::parse_range("0.1,2,11");
    EXPECT_EQ(r.count, 11u);
    EXPECT_EQ(r.grid().back(), 2.0);
    EXPECT_THROW(cli::parse_range("0,2,11"), cli::ConfigError);
    EXPECT_THROW(cli::parse_range("2,1,11"), cli::ConfigError);
    EXPECT_THROW(cli::parse_range("0.1,2,2"), cli::ConfigError);
    EXPECT_THROW(cli::parse_range("0.1,2"), cli::ConfigError);
}

TEST(CliConfig, LoadConfigReadsFile) {
    TempDir dir;
    EXPECT_EQ(cli::load_config(dir.file("a.cfg", "hbar = 2\n")).params.hbar, 2.0);
    EXPECT_THROW(cli::load_config(dir.path("missing.cfg")), cli::ConfigError);
}

TEST(CliPrecedence, FlagBeatsConfigForEveryKey) {
    // config value, flag value, and a probe of the resolved setting
    struct Case {
        std::string key;
        std::string config_value;
        std::string flag_value;
        std::function<bool(const cli::RunConfig&)> has_flag_value;
    };
    const std::vector<Case> cases = {
        {"alpha", "0.8", "0.9", [](const auto& c) { return c.params.alpha() == 0.9; }},
        {"omega", "2", "3", [](const auto& c) { return c.params.omega == 3.0; }},
        {"lambda", "0.1", "0.2", [](const auto& c) { return c.params.damping == 0.2; }},
        {"mass", "2", "3", [](const auto& c) { return c.params.mass == 3.0; }},
        {"hbar", "2", "3", [](const auto& c) { return c.params.hbar == 3.0; }},
        {"n", "1", "2", [](const auto& c) { return c.n == 2; }},
        {"n-max", "4", "5", [](const auto& c) { return c.n_max == 5; }},
        {"mode", "derived", "paper", [](const auto& c) { return c.mode == fb::KineticMode::paper; }},
        {"frame", "gauged", "original", [](const auto& c) { return c.frame == fb::Frame::original; }},
        {"source", "paper", "hermite", [](const auto& c) { return c.source == cli::WaveSource::hermite; }},
        {"y", "0.1,1,5", "0.2,2,6", [](const auto& c) { return c.y.min == 0.2 && c.y.count == 6; }},
        {"t", "0.1,1,5", "0.2,2,6", [](const auto& c) { return c.t.max == 2.0 && c.t.count == 6; }},
        {"out", "a.csv", "b.csv", [](const auto& c) { return c.out == "b.csv"; }},
        {"format", "csv", "text", [](const auto& c) { return c.format == cli::OutputFormat::text; }},
    };
    ASSERT_EQ(cases.size(), cli::config_keys().size());
    TempDir dir;
    for (const auto& c : cases) {
        const auto path = dir.file("p.cfg", c.key + " = " + c.config_value + "\n");
        const auto from_config = cli::parse_invocation(std::vector<std::string>{"spectrum", "--config", path});
        EXPECT_FALSE(c.has_flag_value(from_config.config)) << c.key;
        // flag before and after the config option
        for (const auto& args : {std::vector<std::string>{"spectrum", "--config", path, "--" + c.key, c.flag_value},
                                 std::vector<std::string>{"--" + c.key, c.flag_value, "spectrum", "--config", path}}) {
            const auto inv = cli::parse_invocation(args);
            EXPECT_TRUE(c.has_flag_value(inv.config)) << c.key;
        }
    }
}

TEST(CliRun, SpectrumExample) {
    const auto r = invoke({"spectrum", "--alpha", "1", "--lambda", "0", "--n-max", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,energy\n0,0.5\n1,1.5\n2,2.5\n3,3.5\n");
}

TEST(CliRun, CriticalDampingSpectrumIsZero) {
    const auto r = invoke({"spectrum", "--lambda", "2", "--n-max", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,energy\n0,0\n1,0\n2,0\n");
}

TEST(CliRun, UsageErrorsExitTwo) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"nonsense"}).code, 2);
    EXPECT_EQ(invoke({"spectrum", "--bogus", "1"}).code, 2);
    EXPECT_EQ(invoke({"spectrum", "--alpha", "0"}).code, 2);
    EXPECT_EQ(invoke({"spectrum", "--config", "/nonexistent/x.cfg"}).code, 2);
    EXPECT_EQ(invoke({"figure", "fig9"}).code, 2);
    const auto over = invoke({"spectrum", "--lambda", "3"});
    EXPECT_EQ(over.code, 2);
    EXPECT_NE(over.err.find("lambda > 2 omega^alpha"), std::string::npos);
    EXPECT_EQ(invoke({"spectrum", "--out", "/nonexistent/dir/x.csv"}).code, 2);
}

TEST(CliRun, HelpListsColumns) {
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("figure,n,alpha,y,t,rho"), std::string::npos);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(CliRun, FigureThreeLongForm) {
    const auto r = invoke({"figure", "fig3"});
    ASSERT_EQ(r.code, 0);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 1u + 4 * 5 * 800);
    EXPECT_EQ(rows[0], "figure,n,alpha,y,t,rho");
    std::set<std::string> combos;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream in(rows[i]);
        std::string fig, n, alpha, y, t, rho;
        std::getline(in, fig, ',');
        std::getline(in, n, ',');
        std::getline(in, alpha, ',');
        std::getline(in, y, ',');
        std::getline(in, t, ',');
        std::getline(in, rho, ',');
        EXPECT_EQ(fig, "fig3");
        EXPECT_GE(std::stod(rho), 0.0);
        combos.insert(n + "/" + alpha);
    }
    EXPECT_EQ(combos.size(), 20u);
    EXPECT_TRUE(combos.count("3/0.85"));
}

TEST(CliRun, OutputIsDeterministicAndWrittenToFile) {
    TempDir dir;
    const auto path = dir.path("d.csv");
    const std::vector<std::string> args = {"density", "--n", "1", "--lambda", "0.5", "--y", "0.1,3,30",
                                           "--t", "0.1,2,5", "--out", path};
    ASSERT_EQ(invoke(args).code, 0);
    const auto first = slurp(path);
    ASSERT_EQ(invoke(args).code, 0);
    EXPECT_EQ(first, slurp(path));
    EXPECT_EQ(lines(first).size(), 1u + 30 * 5);
    EXPECT_EQ(first.find('\r'), std::string::npos);
    EXPECT_EQ(lines(first)[0], "n,y,t,rho");
}

TEST(CliRun, NumbersUseTwelveSignificantDigits) {
    EXPECT_EQ(cli::format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(cli::format_number(2.0), "2");
    EXPECT_EQ(cli::format_number(1e-20), "1e-20");
}

TEST(CliRun, OtherSubcommandsProduceHeaders) {
    const auto w = invoke({"wavefunction", "--n", "2", "--y", "0.5,3,10"});
    EXPECT_EQ(w.code, 0);
    EXPECT_EQ(lines(w.out)[0], "y,psi,rho,residual");
    EXPECT_EQ(lines(w.out).size(), 11u);

    const auto h = invoke({"wavefunction", "--n", "2", "--source", "hermite", "--alpha", "0.9",
                           "--y", "0.5,3,10"});
    EXPECT_EQ(h.code, 0);
    for (std::size_t i = 1; i < lines(h.out).size(); ++i) {
        const auto row = lines(h.out)[i];
        EXPECT_LT(std::abs(std::stod(row.substr(row.rfind(',') + 1))), 1e-8);
    }

    const auto c = invoke({"current", "--lambda", "0.5", "--frame", "original", "--y", "0.5,3,10",
                           "--t", "0.1,1,3"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(lines(c.out)[0], "n,frame,y,t,j");
    EXPECT_EQ(lines(c.out)[1].substr(0, 11), "0,original,");

    const auto k = invoke({"classical", "--t", "0.1,10,200", "--format", "text"});
    EXPECT_EQ(k.code, 0);
    EXPECT_NE(lines(k.out)[0].find("residual_derived"), std::string::npos);
}

TEST(CliRun, FigureScriptEmission) {
    TempDir dir;
    const auto data = dir.path("fig.csv");
    const auto script = dir.path("fig.gp");
    ASSERT_EQ(invoke({"figure", "fig2", "--y", "0.1,4,20", "--t", "0.1,4,5", "--out", data,
                      "--script", script})
                  .code,
              0);
    const auto text = slurp(script);
    EXPECT_NE(text.find("splot '" + data + "'"), std::string::npos);
    EXPECT_EQ(lines(slurp(data)).size(), 1u + 2 * 20 * 5);
}

TEST(CliVerify, DefaultParamsPassWithDiscrepancySection) {
    const auto r = invoke({"verify"});
    EXPECT_EQ(r.code, 0) << r.out;
    const auto rows = lines(r.out);
    EXPECT_EQ(rows[0], "section,check,measured,tolerance,status");
    int discrepancy = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].find(",fail"), std::string::npos) << rows[i];
        if (rows[i].rfind("discrepancy,", 0) == 0) {
            ++discrepancy;
            EXPECT_NE(rows[i].find(",info"), std::string::npos);
        }
    }
    EXPECT_EQ(discrepancy, 3 * 2 * 3);
}

TEST(CliVerify, RowsAreFiniteAndExitCodeTracksFailures) {
    for (const auto& extra : {std::vector<std::string>{}, std::vector<std::string>{"--alpha", "0.85", "--lambda", "0.7"},
                              std::vector<std::string>{"--mass", "2", "--hbar", "0.5", "--omega", "1.5"}}) {
        cli::RunConfig cfg;
        std::vector<std::string> args = {"verify"};
        args.insert(args.end(), extra.begin(), extra.end());
        const auto inv = cli::parse_invocation(args);
        const auto report = cli::build_verify_report(inv.config);
        for (const auto& row : report.rows) {
            EXPECT_TRUE(std::isfinite(row.measured)) << row.name;
        }
        EXPECT_EQ(invoke(args).code, report.all_passed() ? 0 : 1);
    }
}

TEST(CliVerify, AllPassedIgnoresInfoRows) {
    cli::VerifyReport r;
    r.rows.push_back({"s", "a", 1.0, 2.0, cli::CheckStatus::pass});
    r.rows.push_back({"s", "b", 5.0, NAN, cli::CheckStatus::info});
    EXPECT_TRUE(r.all_passed());
    EXPECT_NE(r.to_text().find("all checks passed"), std::string::npos);
    r.rows.push_back({"s", "c", 3.0, 2.0, cli::CheckStatus::fail});
    EXPECT_FALSE(r.all_passed());
    EXPECT_NE(r.to_csv().find("s,b,5,,info"), std::string::npos);
    EXPECT_NE(r.to_text().find("1 check(s) failed"), std::string::npos);
}

TEST(CliVerify, TextFormat) {
    const auto r = invoke({"verify", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[discrepancy]"), std::string::npos);
}
