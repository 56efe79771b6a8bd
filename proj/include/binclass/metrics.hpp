#pragma once

#include <optional>

#include "binclass/counts.hpp"

namespace binclass {

/// A metric result. Empty means the metric is undefined for the given counts
/// (its denominator is zero); no NaN or substitute value is ever produced.
using MetricValue = std::optional<double>;

// Ratio metrics. All return an empty MetricValue when their denominator is 0.

/// (fp + fn) / total
MetricValue error_rate(const ConfusionCounts& c);
/// (tp + tn) / total
MetricValue accuracy(const ConfusionCounts& c);
/// fp / (fp + tn)
MetricValue false_positive_rate(const ConfusionCounts& c);
/// tp / (tp + fn)
MetricValue true_positive_rate(const ConfusionCounts& c);
/// tp / (tp + fp)
MetricValue precision(const ConfusionCounts& c);
/// tn / (fp + tn)
MetricValue specificity(const ConfusionCounts& c);

inline MetricValue recall(const ConfusionCounts& c) { return true_positive_rate(c); }
inline MetricValue sensitivity(const ConfusionCounts& c) { return true_positive_rate(c); }
inline MetricValue true_negative_rate(const ConfusionCounts& c) { return specificity(c); }

/// Harmonic mean of precision and recall, built from those two values.
/// Undefined when either is undefined or both are zero.
MetricValue f1_score(const ConfusionCounts& c);

/**
 * Matthews correlation coefficient,
 *
 *   (tp*tn - fp*fn) / sqrt((tp+fp)(tp+fn)(tn+fp)(tn+fn))
 *
 * Undefined when any of the four marginal sums is zero. The numerator is
 * formed exactly in 128-bit integers, so cells up to 2^63 are handled
 * without intermediate overflow.
 */
MetricValue matthews_corrcoef(const ConfusionCounts& c);

struct MetricSet {
    ConfusionCounts counts;
    MetricValue err;
    MetricValue acc;
    MetricValue fpr;
    MetricValue tpr;
    MetricValue pre;
    MetricValue rec;
    MetricValue f1;
    MetricValue sen;
    MetricValue spc;
    MetricValue tnr;
    MetricValue mcc;
};

MetricSet all_metrics(const ConfusionCounts& c);

}  // namespace binclass
