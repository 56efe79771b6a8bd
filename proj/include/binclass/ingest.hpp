#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "binclass/counts.hpp"

namespace binclass {

enum class InputMode { HardLabels, Scores };

/**
 * How to read a prediction file.
 *
 * Each line holds two fields separated by `delimiter`: the actual label, then
 * either the predicted label (HardLabels) or the positive-class score
 * (Scores). A label equal to `positive_label` is Positive. If
 * `negative_label` is set, only that value maps to Negative and any other
 * label is a failure; otherwise every non-positive label is Negative.
 */
struct InputConfig {
    InputMode mode = InputMode::HardLabels;
    std::string positive_label = "1";
    std::optional<std::string> negative_label;
    char delimiter = ',';
    bool has_header = false;
    /// Abort on the first failing line instead of recording it and moving on.
    bool strict = false;

    /// Throws std::invalid_argument if the positive and negative labels coincide.
    void validate() const;

    /// Token written for Negative labels when serializing.
    std::string negative_token() const;
};

struct LineFailure {
    std::size_t line;  // 1-based, header included
    std::string reason;

    friend bool operator==(const LineFailure&, const LineFailure&) = default;
};

struct ParseReport {
    std::size_t records_read = 0;
    std::size_t records_accepted = 0;
    std::vector<LineFailure> failures;
};

/// Thrown in strict mode on the first bad line.
class ParseError : public std::runtime_error {
public:
    ParseError(LineFailure failure);
    const LineFailure& failure() const noexcept { return failure_; }

private:
    LineFailure failure_;
};

template <typename Record>
struct ParseResult {
    std::vector<Record> records;
    ParseReport report;
};

ParseResult<LabeledPrediction> parse_hard_labels(std::istream& in, const InputConfig& cfg);
ParseResult<ScoredSample> parse_scores(std::istream& in, const InputConfig& cfg);

// Inverse of the parsers: one `actual<delim>field` line per record, labels
// written as cfg.positive_label / cfg.negative_token(), scores in shortest
// round-trip form.
void write_hard_labels(std::ostream& out, std::span<const LabeledPrediction> records,
                       const InputConfig& cfg);
void write_scores(std::ostream& out, std::span<const ScoredSample> records,
                  const InputConfig& cfg);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_shortest(double v);

}  // namespace binclass
