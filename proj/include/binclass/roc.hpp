#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "binclass/counts.hpp"

namespace binclass {

/// Raised when ROC analysis gets input it cannot work with: no samples, a
/// single class, or a non-finite score.
class DegenerateInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RocPoint {
    double fpr;
    double tpr;
    /// Scores >= threshold are predicted Positive. +inf for the origin.
    double threshold;

    friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

/**
 * A ROC curve from a threshold sweep.
 *
 * Starts at (0, 0, +inf) and ends at (1, 1); fpr and tpr never decrease and
 * thresholds strictly decrease after the first point. `auc` holds the
 * trapezoidal area under `points`.
 */
struct RocCurve {
    std::vector<RocPoint> points;
    double auc = 0.0;
};

/**
 * Sweeps the decision threshold from +inf down through every distinct score
 * and emits one point per distinct score. Samples with tied scores enter
 * together, so a tie between classes produces a diagonal segment.
 *
 * Throws DegenerateInputError on empty input, a non-finite score (the
 * message names the record index), or input lacking either class.
 */
RocCurve roc_points(std::span<const ScoredSample> samples);

/// Trapezoidal area under the curve's points.
double auc_trapezoid(const RocCurve& curve);

/**
 * Probability that a random positive outscores a random negative, ties
 * counting one half. Uses exhaustive pair counting for small inputs and the
 * rank-sum statistic otherwise.
 */
double auc_pair_count(std::span<const ScoredSample> samples);

/// Exhaustive O(|P| * |N|) pair count.
double auc_pair_count_brute(std::span<const ScoredSample> samples);

/// Mid-rank (Mann-Whitney) formulation of the same statistic, O(n log n).
double auc_rank_sum(std::span<const ScoredSample> samples);

enum class DiagonalPosition { Above, On, Below };

inline constexpr double kDiagonalTolerance = 1e-12;

/// Where a point lies relative to the random-guessing diagonal tpr = fpr.
DiagonalPosition diagonal_position(const RocPoint& point);

}  // namespace binclass
