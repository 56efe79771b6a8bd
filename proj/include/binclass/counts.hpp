#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace binclass {

/// Class identity of a sample. Positive is the class of interest; Negative is
/// the other class, or every other class under one-vs-rest.
enum class Label : std::uint8_t { Positive, Negative };

constexpr Label flip(Label l) noexcept {
    return l == Label::Positive ? Label::Negative : Label::Positive;
}

struct LabeledPrediction {
    Label actual;
    Label predicted;

    friend bool operator==(const LabeledPrediction&, const LabeledPrediction&) = default;
};

/// One classifier output: the positive-class score and the true label.
struct ScoredSample {
    double score;
    Label actual;

    friend bool operator==(const ScoredSample&, const ScoredSample&) = default;
};

/**
 * The 2x2 confusion matrix as four exact tallies.
 *
 * Rows are the actual class, columns the predicted class:
 *
 *              pred P   pred N
 *   actual P     tp       fn
 *   actual N     fp       tn
 *
 * Arithmetic that would overflow a cell throws std::overflow_error.
 */
struct ConfusionCounts {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;

    /// Number of actual positives, tp + fn.
    std::uint64_t positives() const;
    /// Number of actual negatives, fp + tn.
    std::uint64_t negatives() const;
    std::uint64_t total() const;

    friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

inline ConfusionCounts empty() noexcept { return {}; }

/// Returns `counts` with the cell selected by `p` incremented.
ConfusionCounts record(ConfusionCounts counts, LabeledPrediction p);

/// Cell-wise sum.
ConfusionCounts merge(const ConfusionCounts& a, const ConfusionCounts& b);

ConfusionCounts from_predictions(std::span<const LabeledPrediction> pairs);

/// One-vs-rest reduction: Positive iff `actual_class == positive_class`.
template <typename T>
Label binarize(const T& actual_class, const T& positive_class) {
    return actual_class == positive_class ? Label::Positive : Label::Negative;
}

inline Label binarize(std::string_view actual_class, std::string_view positive_class) {
    return binarize<std::string_view>(actual_class, positive_class);
}

/**
 * Converts scores into hard predictions: Positive iff score >= threshold.
 *
 * A threshold of +inf predicts everything Negative and -inf everything
 * Positive. A NaN threshold or a non-finite score throws
 * std::invalid_argument.
 */
std::vector<LabeledPrediction> apply_threshold(std::span<const ScoredSample> samples,
                                               double threshold);

}  // namespace binclass
