#include "binclass/roc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "binclass/metrics.hpp"

namespace binclass {

namespace {

struct ClassSizes {
    std::uint64_t positives = 0;
    std::uint64_t negatives = 0;
};

ClassSizes validate(std::span<const ScoredSample> samples) {
    if (samples.empty()) throw DegenerateInputError("no samples");
    ClassSizes sizes;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i].score)) {
            throw DegenerateInputError("non-finite score at record " + std::to_string(i));
        }
        if (samples[i].actual == Label::Positive) {
            ++sizes.positives;
        } else {
            ++sizes.negatives;
        }
    }
    if (sizes.positives == 0 || sizes.negatives == 0) {
        throw DegenerateInputError("need both classes");
    }
    return sizes;
}

std::vector<std::size_t> order_by_score_desc(std::span<const ScoredSample> samples) {
    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return samples[a].score > samples[b].score;
    });
    return order;
}

}  // namespace

RocCurve roc_points(std::span<const ScoredSample> samples) {
    const ClassSizes sizes = validate(samples);
    const auto order = order_by_score_desc(samples);

    RocCurve curve;
    curve.points.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});

    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::size_t i = 0;
    while (i < order.size()) {
        const double score = samples[order[i]].score;
        for (; i < order.size() && samples[order[i]].score == score; ++i) {
            if (samples[order[i]].actual == Label::Positive) {
                ++tp;
            } else {
                ++fp;
            }
        }
        const ConfusionCounts at{tp, fp, sizes.positives - tp, sizes.negatives - fp};
        curve.points.push_back({*false_positive_rate(at), *true_positive_rate(at), score});
    }
    curve.auc = auc_trapezoid(curve);
    return curve;
}

double auc_trapezoid(const RocCurve& curve) {
    double area = 0.0;
    for (std::size_t k = 1; k < curve.points.size(); ++k) {
        const auto& a = curve.points[k - 1];
        const auto& b = curve.points[k];
        area += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
    }
    return area;
}

double auc_pair_count_brute(std::span<const ScoredSample> samples) {
    const ClassSizes sizes = validate(samples);
    // Twice the half-credit count, kept integral.
    std::uint64_t credit2 = 0;
    for (const auto& p : samples) {
        if (p.actual != Label::Positive) continue;
        for (const auto& n : samples) {
            if (n.actual != Label::Negative) continue;
            if (p.score > n.score) {
                credit2 += 2;
            } else if (p.score == n.score) {
                credit2 += 1;
            }
        }
    }
    return static_cast<double>(credit2) /
           (2.0 * static_cast<double>(sizes.positives) * static_cast<double>(sizes.negatives));
}

double auc_rank_sum(std::span<const ScoredSample> samples) {
    const ClassSizes sizes = validate(samples);
    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return samples[a].score < samples[b].score; });

    // Sum of doubled 1-based mid-ranks of the positives. A tie block spanning
    // sorted positions [lo, hi) has doubled mid-rank lo + hi + 1.
    std::uint64_t rank2_sum = 0;
    std::size_t lo = 0;
    while (lo < order.size()) {
        std::size_t hi = lo + 1;
        while (hi < order.size() && samples[order[hi]].score == samples[order[lo]].score) ++hi;
        const std::uint64_t rank2 = lo + hi + 1;
        for (std::size_t k = lo; k < hi; ++k) {
            if (samples[order[k]].actual == Label::Positive) rank2_sum += rank2;
        }
        lo = hi;
    }
    const std::uint64_t u2 = rank2_sum - sizes.positives * (sizes.positives + 1);
    return static_cast<double>(u2) /
           (2.0 * static_cast<double>(sizes.positives) * static_cast<double>(sizes.negatives));
}

double auc_pair_count(std::span<const ScoredSample> samples) {
    constexpr std::size_t kBruteForceLimit = 2048;
    return samples.size() <= kBruteForceLimit ? auc_pair_count_brute(samples)
                                              : auc_rank_sum(samples);
}

DiagonalPosition diagonal_position(const RocPoint& point) {
    if (std::abs(point.tpr - point.fpr) <= kDiagonalTolerance) return DiagonalPosition::On;
    return point.tpr > point.fpr ? DiagonalPosition::Above : DiagonalPosition::Below;
}

}  // namespace binclass
