#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "cli.hpp"

namespace fracbateman::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
    double value = 0.0;
    const auto t = trim(text);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw ConfigError(fmt::format("{}: '{}' is not a number", key, text));
    }
    return value;
}

int parse_int(std::string_view key, std::string_view text) {
    int value = 0;
    const auto t = trim(text);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw ConfigError(fmt::format("{}: '{}' is not an integer", key, text));
    }
    return value;
}

double positive(std::string_view key, double v) {
    if (!(v > 0.0)) {
        throw ConfigError(fmt::format("{} must be positive, got {}", key, v));
    }
    return v;
}

} // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {"alpha", "omega", "lambda", "mass", "hbar",
                                                  "n",     "n-max", "mode",   "frame", "source",
                                                  "y",     "t",     "out",    "format"};
    return keys;
}

std::string format_number(double value) { return fmt::format("{:.12g}", value); }

Range parse_range(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(trim(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (parts.size() != 3) {
        throw ConfigError(fmt::format("range '{}' must be min,max,count", text));
    }
    Range r{parse_double("range min", parts[0]), parse_double("range max", parts[1]),
            static_cast<std::size_t>(0)};
    const int count = parse_int("range count", parts[2]);
    if (count < 3) {
        throw ConfigError(fmt::format("range '{}' needs at least 3 points", text));
    }
    r.count = static_cast<std::size_t>(count);
    if (!(r.min >= kMinGridCoordinate) || !(r.max > r.min)) {
        throw ConfigError(fmt::format("range '{}' must satisfy {} <= min < max", text,
                                      kMinGridCoordinate));
    }
    return r;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view raw) {
    const std::string_view value = trim(raw);
    if (key == "alpha") {
        const double a = parse_double(key, value);
        if (!(a > 0.0 && a <= 1.0)) {
            throw ConfigError(fmt::format("alpha must satisfy 0 < alpha <= 1, got {}", value));
        }
        cfg.params.order = FractionalOrder(a);
    } else if (key == "omega") {
        cfg.params.omega = positive(key, parse_double(key, value));
    } else if (key == "lambda") {
        const double l = parse_double(key, value);
        if (!(l >= 0.0)) {
            throw ConfigError(fmt::format("lambda must be nonnegative, got {}", value));
        }
        cfg.params.damping = l;
    } else if (key == "mass") {
        cfg.params.mass = positive(key, parse_double(key, value));
    } else if (key == "hbar") {
        cfg.params.hbar = positive(key, parse_double(key, value));
    } else if (key == "n") {
        const int n = parse_int(key, value);
        if (n < 0 || n > kMaxHermiteDegree) {
            throw ConfigError(fmt::format("n must lie in [0, {}]", kMaxHermiteDegree));
        }
        cfg.n = n;
    } else if (key == "n-max") {
        const int n = parse_int(key, value);
        if (n < 0 || n > kMaxHermiteDegree) {
            throw ConfigError(fmt::format("n-max must lie in [0, {}]", kMaxHermiteDegree));
        }
        cfg.n_max = n;
    } else if (key == "mode") {
        if (value == "paper") {
            cfg.mode = KineticMode::paper;
        } else if (value == "derived") {
            cfg.mode = KineticMode::derived;
        } else {
            throw ConfigError(fmt::format("mode must be paper or derived, got '{}'", value));
        }
    } else if (key == "frame") {
        if (value == "gauged") {
            cfg.frame = Frame::gauged;
        } else if (value == "original") {
            cfg.frame = Frame::original;
        } else {
            throw ConfigError(fmt::format("frame must be gauged or original, got '{}'", value));
        }
    } else if (key == "source") {
        if (value == "paper") {
            cfg.source = WaveSource::paper;
        } else if (value == "hermite") {
            cfg.source = WaveSource::hermite;
        } else {
            throw ConfigError(fmt::format("source must be paper or hermite, got '{}'", value));
        }
    } else if (key == "y") {
        cfg.y = parse_range(value);
    } else if (key == "t") {
        cfg.t = parse_range(value);
    } else if (key == "out") {
        cfg.out = std::string(value);
    } else if (key == "format") {
        if (value == "csv") {
            cfg.format = OutputFormat::csv;
        } else if (value == "text") {
            cfg.format = OutputFormat::text;
        } else {
            throw ConfigError(fmt::format("format must be csv or text, got '{}'", value));
        }
    } else {
        throw ConfigError(fmt::format("unknown key '{}'", key));
    }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(fmt::format("line {}: expected 'key = value'", line_no), line_no);
        }
        const std::string_view key = trim(line.substr(0, eq));
        try {
            apply_setting(base, key, line.substr(eq + 1));
        } catch (const std::exception& e) {
            throw ConfigError(fmt::format("line {}: {}", line_no, e.what()), line_no);
        }
    }
    return base;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(fmt::format("cannot read config file '{}'", path));
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

} // namespace fracbateman::cli
