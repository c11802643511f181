#include "sdlab/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>

#include "sdlab/errors.hpp"

namespace sdlab {

std::string format_real(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw ContractViolation("format_real: conversion failed");
    return std::string(buf.data(), ptr);
}

std::string format_csv(std::span<const TraceSeries> series, Algorithm algorithm) {
    std::vector<const TraceSeries*> selected;
    for (const auto& s : series) {
        if (s.algorithm == algorithm) selected.push_back(&s);
    }
    std::stable_sort(selected.begin(), selected.end(),
                     [](const TraceSeries* a, const TraceSeries* b) { return a->trial < b->trial; });

    std::string out(kCsvHeader);
    out += '\n';
    const std::string alg(to_string(algorithm));
    for (const TraceSeries* s : selected) {
        const auto res_norm = s->normalized(MetricName::sigma_res_norm);
        const auto dist_norm = s->normalized(MetricName::d_soln_norm);
        for (std::size_t k = 0; k < s->size(); ++k) {
            out += alg;
            out += ',' + std::to_string(s->trial);
            out += ',' + std::to_string(k);
            out += ',';
            if (s->alpha[k]) out += format_real(*s->alpha[k]);
            out += ',' + format_real(s->sigma_res[k]);
            out += ',' + format_real(res_norm[k]);
            out += ',' + format_real(s->d_soln[k]);
            out += ',' + format_real(dist_norm[k]);
            out += '\n';
        }
    }
    return out;
}

std::vector<std::filesystem::path> write_csv(const EnsembleResult& res,
                                             const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
    const auto series = to_series(res);
    std::vector<std::filesystem::path> written;
    for (const Algorithm a : res.config.algorithms) {
        auto path = dir / (std::string(to_string(a)) + ".csv");
        write_text_file(path, format_csv(series, a));
        written.push_back(std::move(path));
    }
    return written;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    while (true) {
        const auto comma = line.find(',');
        fields.push_back(line.substr(0, comma));
        if (comma == std::string_view::npos) break;
        line = line.substr(comma + 1);
    }
    return fields;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
    T v{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ConfigError("csv line " + std::to_string(line_no) + ": bad number '" +
                          std::string(field) + "'");
    }
    return v;
}

}  // namespace

std::vector<TraceSeries> parse_csv(std::string_view text) {
    std::map<TraceKey, TraceSeries> traces;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != kCsvHeader) throw ConfigError("csv: unexpected header '" + std::string(line) + "'");
            header_seen = true;
            continue;
        }
        const auto f = split_fields(line);
        if (f.size() != 8) {
            throw ConfigError("csv line " + std::to_string(line_no) + ": expected 8 fields");
        }
        const TraceKey key{parse_algorithm(f[0]), parse_number<std::size_t>(f[1], line_no)};
        const auto iter = parse_number<std::size_t>(f[2], line_no);
        auto& s = traces[key];
        s.algorithm = key.algorithm;
        s.trial = key.trial;
        if (iter != s.size()) {
            throw ConfigError("csv line " + std::to_string(line_no) + ": iterations out of order");
        }
        s.alpha.push_back(f[3].empty() ? std::nullopt
                                       : std::optional<double>(parse_number<double>(f[3], line_no)));
        s.sigma_res.push_back(parse_number<double>(f[4], line_no));
        s.d_soln.push_back(parse_number<double>(f[6], line_no));
    }
    if (!header_seen) throw ConfigError("csv: empty file");
    if (traces.empty()) throw ConfigError("csv: no data rows");
    std::vector<TraceSeries> out;
    out.reserve(traces.size());
    for (auto& [key, s] : traces) out.push_back(std::move(s));
    return out;
}

std::vector<TraceSeries> read_csv(const std::filesystem::path& path) {
    try {
        return parse_csv(read_text_file(path));
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

}  // namespace sdlab
