#include "binclass/ingest.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>

namespace binclass {

void InputConfig::validate() const {
    if (negative_label && *negative_label == positive_label) {
        throw std::invalid_argument("positive and negative labels must differ");
    }
}

std::string InputConfig::negative_token() const {
    if (negative_label) return *negative_label;
    return positive_label == "0" ? "1" : "0";
}

ParseError::ParseError(LineFailure failure)
    : std::runtime_error("line " + std::to_string(failure.line) + ": " + failure.reason),
      failure_(std::move(failure)) {}

namespace {

struct Fields {
    std::string_view actual;
    std::string_view second;
};

std::string_view trim(std::string_view s, char delimiter) {
    auto blank = [&](char c) { return (c == ' ' || c == '\t') && c != delimiter; };
    while (!s.empty() && blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && blank(s.back())) s.remove_suffix(1);
    return s;
}

// Either two fields or a failure reason.
struct SplitResult {
    std::optional<Fields> fields;
    std::string reason;
};

SplitResult split(std::string_view line, char delimiter) {
    std::size_t n = 1;
    for (char c : line) n += (c == delimiter);
    if (n != 2) {
        return {std::nullopt, "expected 2 fields, found " + std::to_string(n)};
    }
    const auto pos = line.find(delimiter);
    return {Fields{trim(line.substr(0, pos), delimiter), trim(line.substr(pos + 1), delimiter)},
            {}};
}

std::optional<Label> map_label(std::string_view token, const InputConfig& cfg) {
    if (token == cfg.positive_label) return Label::Positive;
    if (!cfg.negative_label || token == *cfg.negative_label) return Label::Negative;
    return std::nullopt;
}

std::string unknown_label(std::string_view token) {
    return "unknown label '" + std::string(token) + "'";
}

/// Drives the line loop shared by both parsers. `handle` turns a pair of
/// fields into a record or returns a failure reason.
template <typename Record, typename Handler>
ParseResult<Record> parse_lines(std::istream& in, const InputConfig& cfg, Handler handle) {
    cfg.validate();
    ParseResult<Record> result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && cfg.has_header) continue;
        if (line.empty()) continue;

        ++result.report.records_read;
        std::string reason;
        auto split_result = split(line, cfg.delimiter);
        if (split_result.fields) {
            std::optional<Record> rec = handle(*split_result.fields, reason);
            if (rec) {
                result.records.push_back(*rec);
                ++result.report.records_accepted;
                continue;
            }
        } else {
            reason = std::move(split_result.reason);
        }
        LineFailure failure{line_no, std::move(reason)};
        if (cfg.strict) throw ParseError(std::move(failure));
        result.report.failures.push_back(std::move(failure));
    }
    return result;
}

}  // namespace

ParseResult<LabeledPrediction> parse_hard_labels(std::istream& in, const InputConfig& cfg) {
    return parse_lines<LabeledPrediction>(
        in, cfg, [&](const Fields& f, std::string& reason) -> std::optional<LabeledPrediction> {
            const auto actual = map_label(f.actual, cfg);
            if (!actual) {
                reason = unknown_label(f.actual);
                return std::nullopt;
            }
            const auto predicted = map_label(f.second, cfg);
            if (!predicted) {
                reason = unknown_label(f.second);
                return std::nullopt;
            }
            return LabeledPrediction{*actual, *predicted};
        });
}

ParseResult<ScoredSample> parse_scores(std::istream& in, const InputConfig& cfg) {
    return parse_lines<ScoredSample>(
        in, cfg, [&](const Fields& f, std::string& reason) -> std::optional<ScoredSample> {
            const auto actual = map_label(f.actual, cfg);
            if (!actual) {
                reason = unknown_label(f.actual);
                return std::nullopt;
            }
            double score = 0.0;
            const char* first = f.second.data();
            const char* last = first + f.second.size();
            const auto [ptr, ec] = std::from_chars(first, last, score);
            if (ec == std::errc::result_out_of_range && ptr == last) {
                reason = "score out of range '" + std::string(f.second) + "'";
                return std::nullopt;
            }
            if (f.second.empty() || ec != std::errc{} || ptr != last) {
                reason = "non-numeric score '" + std::string(f.second) + "'";
                return std::nullopt;
            }
            if (!std::isfinite(score)) {
                reason = "non-finite score";
                return std::nullopt;
            }
            return ScoredSample{score, *actual};
        });
}

std::string format_shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::string token(Label l, const InputConfig& cfg) {
    return l == Label::Positive ? cfg.positive_label : cfg.negative_token();
}

}  // namespace

void write_hard_labels(std::ostream& out, std::span<const LabeledPrediction> records,
                       const InputConfig& cfg) {
    for (const auto& r : records) {
        out << token(r.actual, cfg) << cfg.delimiter << token(r.predicted, cfg) << '\n';
    }
}

void write_scores(std::ostream& out, std::span<const ScoredSample> records,
                  const InputConfig& cfg) {
    for (const auto& r : records) {
        out << token(r.actual, cfg) << cfg.delimiter << format_shortest(r.score) << '\n';
    }
}

}  // namespace binclass
