#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "binclass/ingest.hpp"
#include "binclass/metrics.hpp"
#include "binclass/roc.hpp"

namespace binclass {

/// How undefined metrics are shown. The computed values are never altered;
/// `Zero` only changes what the renderers print.
enum class ZeroDivision { Undefined, Zero };

/// Everything needed to make a report self-describing: where the data came
/// from, how it was read, and every effective option.
struct ReportMeta {
    std::string command = "evaluate";
    std::string input = "-";
    InputConfig config;
    std::optional<double> threshold;
    ZeroDivision zero_division = ZeroDivision::Undefined;
    std::size_t records_read = 0;
    std::size_t records_accepted = 0;
    std::size_t failures = 0;
};

/**
 * Result of one evaluation run.
 *
 * `metrics` is present whenever hard predictions exist (hard-label input, or
 * scores with a threshold). `curve` is present for ROC runs; its `auc` field
 * is the trapezoidal area.
 */
struct EvaluationReport {
    ReportMeta meta;
    std::optional<MetricSet> metrics;
    std::optional<RocCurve> curve;

    std::optional<double> auc() const {
        return curve ? std::optional<double>(curve->auc) : std::nullopt;
    }
};

/// Plain-text report. Metrics use six decimals; output bytes depend only on
/// the report contents.
std::string render_text(const EvaluationReport& r);

/**
 * JSON report with keys in this order:
 *
 *   meta    {command, input, mode, positive_label, negative_label, delimiter,
 *            header, threshold, zero_division, strict, records_read,
 *            records_accepted, failures}
 *   counts  {tp, fp, fn, tn}
 *   metrics {err, acc, fpr, tpr, pre, rec, f1, sen, spc, tnr, mcc}
 *   roc     {points: [{fpr, tpr, threshold}], auc}
 *
 * counts/metrics and roc are omitted when absent from the report. Undefined
 * metrics are null (0 under ZeroDivision::Zero). The +inf threshold of the
 * first ROC point is null. Reals use shortest round-trip formatting.
 */
std::string render_json(const EvaluationReport& r, int indent = 2);

inline constexpr int kSvgWidth = 640;
inline constexpr int kSvgHeight = 480;
inline constexpr int kSvgMargin = 50;

/// Standalone 640x480 SVG of the curve with axes, a dashed random-guessing
/// diagonal and an "AUC = x.xxx" legend.
std::string render_svg(const RocCurve& curve, std::string_view title);

}  // namespace binclass
