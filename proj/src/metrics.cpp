#include "binclass/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace binclass {

namespace {

__extension__ typedef unsigned __int128 u128;

MetricValue ratio(u128 num, u128 den) {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
}

// Sums are taken in 128 bits so that no pair of 64-bit cells can overflow.
u128 sum(std::uint64_t a, std::uint64_t b) { return u128{a} + u128{b}; }

long double product(u128 a, u128 b) {
    u128 out;
    if (!__builtin_mul_overflow(a, b, &out)) return static_cast<long double>(out);
    return static_cast<long double>(a) * static_cast<long double>(b);
}

}  // namespace

MetricValue error_rate(const ConfusionCounts& c) {
    return ratio(sum(c.fp, c.fn), sum(c.fp, c.fn) + sum(c.tp, c.tn));
}

MetricValue accuracy(const ConfusionCounts& c) {
    return ratio(sum(c.tp, c.tn), sum(c.fp, c.fn) + sum(c.tp, c.tn));
}

MetricValue false_positive_rate(const ConfusionCounts& c) { return ratio(c.fp, sum(c.fp, c.tn)); }

MetricValue true_positive_rate(const ConfusionCounts& c) { return ratio(c.tp, sum(c.tp, c.fn)); }

MetricValue precision(const ConfusionCounts& c) { return ratio(c.tp, sum(c.tp, c.fp)); }

MetricValue specificity(const ConfusionCounts& c) { return ratio(c.tn, sum(c.fp, c.tn)); }

MetricValue f1_score(const ConfusionCounts& c) {
    const MetricValue pre = precision(c);
    const MetricValue rec = recall(c);
    if (!pre || !rec) return std::nullopt;
    const double denom = *pre + *rec;
    if (denom == 0.0) return std::nullopt;
    return 2.0 * (*pre * *rec) / denom;
}

MetricValue matthews_corrcoef(const ConfusionCounts& c) {
    const u128 pred_pos = sum(c.tp, c.fp);
    const u128 act_pos = sum(c.tp, c.fn);
    const u128 pred_neg = sum(c.tn, c.fn);
    const u128 act_neg = sum(c.tn, c.fp);
    if (pred_pos == 0 || act_pos == 0 || pred_neg == 0 || act_neg == 0) return std::nullopt;

    const u128 agree = u128{c.tp} * c.tn;
    const u128 disagree = u128{c.fp} * c.fn;
    const long double num = agree >= disagree ? static_cast<long double>(agree - disagree)
                                              : -static_cast<long double>(disagree - agree);
    // Predicted marginals are paired with each other (and actual with actual)
    // so that flipping predictions or swapping class roles leaves the
    // denominator bit-identical.
    const long double den = std::sqrt(product(pred_pos, pred_neg) * product(act_pos, act_neg));
    return std::clamp(static_cast<double>(num / den), -1.0, 1.0);
}

MetricSet all_metrics(const ConfusionCounts& c) {
    MetricSet m;
    m.counts = c;
    m.err = error_rate(c);
    m.acc = accuracy(c);
    m.fpr = false_positive_rate(c);
    m.tpr = true_positive_rate(c);
    m.pre = precision(c);
    m.rec = recall(c);
    m.f1 = f1_score(c);
    m.sen = sensitivity(c);
    m.spc = specificity(c);
    m.tnr = true_negative_rate(c);
    m.mcc = matthews_corrcoef(c);
    return m;
}

}  // namespace binclass
