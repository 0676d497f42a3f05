#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fracbateman/fracbateman.hpp"

namespace fracbateman::cli {

enum class OutputFormat { csv, text };
enum class WaveSource { paper, hermite };

/// Closed range sampled with `count` equally spaced nodes.
struct Range {
    double min;
    double max;
    std::size_t count;

    Grid1D grid() const { return Grid1D::uniform(min, max, count); }
};

/// Fully resolved run settings. Precedence: command-line flag, then config
/// file, then these defaults.
struct RunConfig {
    BatemanParams params{};
    KineticMode mode = KineticMode::derived;
    Frame frame = Frame::gauged;
    WaveSource source = WaveSource::paper;
    Range y{1e-3, 8.0, 800};
    Range t{1e-3, 5.0, 50};
    int n = 0;
    int n_max = 3;
    std::string out;
    OutputFormat format = OutputFormat::csv;
};

/// Bad configuration or flag value. `line` is the 1-based config line, 0 if
/// the problem did not come from a file.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = 0) : std::runtime_error(what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Keys accepted in config files; each matches the long flag of the same name.
const std::vector<std::string>& config_keys();

/// Applies one key/value setting (shared by config files and flags).
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Parses `key = value` lines (# comments, blank lines allowed) on top of `base`.
RunConfig parse_config(std::string_view text, RunConfig base = {});

RunConfig load_config(const std::string& path);

/// "min,max,count".
Range parse_range(std::string_view text);

/// %.12g formatting used by every CSV column.
std::string format_number(double value);

enum class CheckStatus { pass, fail, info };

struct CheckRow {
    std::string section;
    std::string name;
    double measured;
    /// NaN for info rows without a threshold.
    double tolerance;
    CheckStatus status;
};

struct VerifyReport {
    std::vector<CheckRow> rows;

    bool all_passed() const;
    std::string to_csv() const;
    std::string to_text() const;
};

/// Runs the verification suite for `cfg`.
VerifyReport build_verify_report(const RunConfig& cfg);

/// A parsed command line with its settings fully resolved.
struct Invocation {
    /// Subcommand name; empty when help was requested.
    std::string command;
    RunConfig config;
    /// Figure id and optional gnuplot script path (figure subcommand only).
    std::string figure;
    std::string script;
    /// Help text when --help was given.
    std::string help;
};

/// Parses args (program name excluded), reads --config if present and applies
/// flags on top. Throws ConfigError on any usage or configuration problem.
Invocation parse_invocation(std::span<const std::string> args);

/// Entry point. args excludes the program name. Returns 0 on success, 1 when
/// `verify` finds a failing check, 2 on usage or configuration errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace fracbateman::cli
