#include "binclass/counts.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace binclass {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("confusion matrix cell overflow");
    }
    return out;
}

}  // namespace

std::uint64_t ConfusionCounts::positives() const { return checked_add(tp, fn); }

std::uint64_t ConfusionCounts::negatives() const { return checked_add(fp, tn); }

std::uint64_t ConfusionCounts::total() const { return checked_add(positives(), negatives()); }

ConfusionCounts record(ConfusionCounts counts, LabeledPrediction p) {
    const bool actual_pos = p.actual == Label::Positive;
    const bool pred_pos = p.predicted == Label::Positive;
    std::uint64_t& cell = actual_pos ? (pred_pos ? counts.tp : counts.fn)
                                     : (pred_pos ? counts.fp : counts.tn);
    cell = checked_add(cell, 1);
    return counts;
}

ConfusionCounts merge(const ConfusionCounts& a, const ConfusionCounts& b) {
    return {checked_add(a.tp, b.tp), checked_add(a.fp, b.fp), checked_add(a.fn, b.fn),
            checked_add(a.tn, b.tn)};
}

ConfusionCounts from_predictions(std::span<const LabeledPrediction> pairs) {
    ConfusionCounts acc;
    for (const auto& p : pairs) acc = record(acc, p);
    return acc;
}

std::vector<LabeledPrediction> apply_threshold(std::span<const ScoredSample> samples,
                                               double threshold) {
    if (std::isnan(threshold)) {
        throw std::invalid_argument("decision threshold is NaN");
    }
    std::vector<LabeledPrediction> out;
    out.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        if (!std::isfinite(s.score)) {
            throw std::invalid_argument("non-finite score at record " + std::to_string(i));
        }
        out.push_back({s.actual, s.score >= threshold ? Label::Positive : Label::Negative});
    }
    return out;
}

}  // namespace binclass
