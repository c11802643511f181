#include "sdlab/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sdlab/errors.hpp"

namespace sdlab {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

using KeyValues = std::map<std::string, std::string, std::less<>>;

KeyValues parse_key_values(std::string_view text, const std::set<std::string_view>& allowed) {
    KeyValues out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (!allowed.contains(key)) {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        if (!out.emplace(key, value).second) {
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }
    return out;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError(std::string(key) + ": expected a non-negative integer, got '" +
                          std::string(value) + "'");
    }
    return v;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ConfigError(std::string(key) + ": expected true or false, got '" + std::string(value) + "'");
}

std::vector<Algorithm> parse_algorithm_list(std::string_view value) {
    std::vector<Algorithm> out;
    while (true) {
        const auto comma = value.find(',');
        const auto item = trim(value.substr(0, comma));
        if (item.empty()) throw ConfigError("algorithms: empty entry");
        out.push_back(parse_algorithm(item));
        if (comma == std::string_view::npos) break;
        value = value.substr(comma + 1);
    }
    return out;
}

const std::string& require(const KeyValues& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError("missing required key '" + key + "'");
    return it->second;
}

void validate_algorithms(const std::vector<Algorithm>& algorithms) {
    if (algorithms.empty()) throw ConfigError("algorithms must not be empty");
    std::set<Algorithm> seen(algorithms.begin(), algorithms.end());
    if (seen.size() != algorithms.size()) throw ConfigError("algorithms contains duplicates");
}

}  // namespace

void ExperimentConfig::validate() const {
    if (n < 2) throw ConfigError("n must be >= 2 (got " + std::to_string(n) + ")");
    if (n_trials < 1) throw ConfigError("n_trials must be >= 1");
    if (n_iters < 1) throw ConfigError("n_iters must be >= 1");
    validate_algorithms(algorithms);
}

void FigureSpec::validate() const { validate_algorithms(algorithms); }

ExperimentConfig parse_config(std::string_view text) {
    const KeyValues kv = parse_key_values(
        text, {"n", "n_trials", "n_iters", "algorithms", "mode", "master_seed", "shared_problem",
               "output_dir"});
    ExperimentConfig cfg;
    cfg.n = parse_unsigned("n", require(kv, "n"));
    cfg.n_trials = parse_unsigned("n_trials", require(kv, "n_trials"));
    cfg.n_iters = parse_unsigned("n_iters", require(kv, "n_iters"));
    cfg.algorithms = parse_algorithm_list(require(kv, "algorithms"));
    if (const auto it = kv.find("mode"); it != kv.end()) cfg.mode = parse_solver_mode(it->second);
    if (const auto it = kv.find("master_seed"); it != kv.end()) {
        cfg.master_seed = parse_unsigned("master_seed", it->second);
    }
    if (const auto it = kv.find("shared_problem"); it != kv.end()) {
        cfg.shared_problem = parse_bool("shared_problem", it->second);
    }
    if (const auto it = kv.find("output_dir"); it != kv.end()) cfg.output_dir = it->second;
    cfg.validate();
    return cfg;
}

std::string format_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "n = " << cfg.n << '\n'
        << "n_trials = " << cfg.n_trials << '\n'
        << "n_iters = " << cfg.n_iters << '\n'
        << "algorithms = ";
    for (std::size_t i = 0; i < cfg.algorithms.size(); ++i) {
        out << (i ? "," : "") << to_string(cfg.algorithms[i]);
    }
    out << '\n'
        << "mode = " << to_string(cfg.mode) << '\n'
        << "master_seed = " << cfg.master_seed << '\n'
        << "shared_problem = " << (cfg.shared_problem ? "true" : "false") << '\n'
        << "output_dir = " << cfg.output_dir.generic_string() << '\n';
    return out.str();
}

FigureSpec parse_figure_spec(std::string_view text) {
    const KeyValues kv = parse_key_values(text, {"algorithms", "y_metric", "log_y", "title"});
    FigureSpec spec;
    spec.algorithms = parse_algorithm_list(require(kv, "algorithms"));
    spec.y_metric = parse_metric_name(require(kv, "y_metric"));
    if (const auto it = kv.find("log_y"); it != kv.end()) spec.log_y = parse_bool("log_y", it->second);
    if (const auto it = kv.find("title"); it != kv.end()) spec.title = it->second;
    spec.validate();
    return spec;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    try {
        return parse_config(read_text_file(path));
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

FigureSpec load_figure_spec(const std::filesystem::path& path) {
    try {
        return parse_figure_spec(read_text_file(path));
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

}  // namespace sdlab
