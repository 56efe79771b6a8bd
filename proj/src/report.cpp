#include "binclass/report.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <utility>

namespace binclass {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string mode_name(InputMode m) { return m == InputMode::Scores ? "scores" : "hard-labels"; }

std::string zero_division_name(ZeroDivision z) {
    return z == ZeroDivision::Zero ? "zero" : "undefined";
}

std::string delimiter_text(char c) { return c == '\t' ? "\\t" : std::string(1, c); }

MetricValue shown(const MetricValue& v, ZeroDivision policy) {
    if (!v && policy == ZeroDivision::Zero) return 0.0;
    return v;
}

// Fixed display order; the same order is used for JSON keys.
std::vector<std::pair<const char*, MetricValue>> named_metrics(const MetricSet& m) {
    return {{"err", m.err}, {"acc", m.acc}, {"fpr", m.fpr}, {"tpr", m.tpr},
            {"pre", m.pre}, {"rec", m.rec}, {"f1", m.f1},   {"sen", m.sen},
            {"spc", m.spc}, {"tnr", m.tnr}, {"mcc", m.mcc}};
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
    return s;
}

std::string pad_right(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string pad_left(std::string s, std::size_t width) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
}

}  // namespace

std::string render_text(const EvaluationReport& r) {
    const ReportMeta& meta = r.meta;
    std::ostringstream out;
    out << "command: " << meta.command << '\n'
        << "input: " << meta.input << '\n'
        << "mode: " << mode_name(meta.config.mode) << '\n'
        << "positive_label: " << meta.config.positive_label << '\n'
        << "negative_label: " << meta.config.negative_label.value_or("(any other)") << '\n'
        << "delimiter: " << delimiter_text(meta.config.delimiter) << '\n'
        << "header: " << (meta.config.has_header ? "true" : "false") << '\n'
        << "threshold: " << (meta.threshold ? format_shortest(*meta.threshold) : "none") << '\n'
        << "zero_division: " << zero_division_name(meta.zero_division) << '\n'
        << "strict: " << (meta.config.strict ? "true" : "false") << '\n'
        << "records_read: " << meta.records_read << '\n'
        << "records_accepted: " << meta.records_accepted << '\n'
        << "failures: " << meta.failures << '\n';

    if (r.metrics) {
        const ConfusionCounts& c = r.metrics->counts;
        constexpr std::size_t kCell = 12;
        out << '\n'
            << "confusion matrix (rows: actual, columns: predicted)\n"
            << pad_right("", 8) << pad_left("P", kCell) << pad_left("N", kCell) << '\n'
            << pad_right("P", 8) << pad_left(std::to_string(c.tp), kCell)
            << pad_left(std::to_string(c.fn), kCell) << '\n'
            << pad_right("N", 8) << pad_left(std::to_string(c.fp), kCell)
            << pad_left(std::to_string(c.tn), kCell) << '\n'
            << '\n';
        for (const auto& [name, value] : named_metrics(*r.metrics)) {
            const MetricValue v = shown(value, meta.zero_division);
            out << upper(name) << ' ' << (v ? fixed(*v, 6) : "undefined") << '\n';
        }
    }

    if (r.curve) {
        out << '\n' << "roc points (fpr tpr threshold)\n";
        for (const auto& p : r.curve->points) {
            out << fixed(p.fpr, 6) << ' ' << fixed(p.tpr, 6) << ' ' << format_shortest(p.threshold)
                << '\n';
        }
        out << "AUC " << fixed(r.curve->auc, 6) << '\n';
    }
    return out.str();
}

std::string render_json(const EvaluationReport& r, int indent) {
    const ReportMeta& meta = r.meta;
    ordered_json doc;

    ordered_json m;
    m["command"] = meta.command;
    m["input"] = meta.input;
    m["mode"] = mode_name(meta.config.mode);
    m["positive_label"] = meta.config.positive_label;
    m["negative_label"] =
        meta.config.negative_label ? ordered_json(*meta.config.negative_label) : ordered_json();
    m["delimiter"] = std::string(1, meta.config.delimiter);
    m["header"] = meta.config.has_header;
    m["threshold"] = meta.threshold ? ordered_json(*meta.threshold) : ordered_json();
    m["zero_division"] = zero_division_name(meta.zero_division);
    m["strict"] = meta.config.strict;
    m["records_read"] = meta.records_read;
    m["records_accepted"] = meta.records_accepted;
    m["failures"] = meta.failures;
    doc["meta"] = std::move(m);

    if (r.metrics) {
        const ConfusionCounts& c = r.metrics->counts;
        doc["counts"] = ordered_json{{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}, {"tn", c.tn}};
        ordered_json metrics = ordered_json::object();
        for (const auto& [name, value] : named_metrics(*r.metrics)) {
            const MetricValue v = shown(value, meta.zero_division);
            metrics[name] = v ? ordered_json(*v) : ordered_json();
        }
        doc["metrics"] = std::move(metrics);
    }

    if (r.curve) {
        ordered_json points = ordered_json::array();
        for (const auto& p : r.curve->points) {
            points.push_back(ordered_json{
                {"fpr", p.fpr},
                {"tpr", p.tpr},
                {"threshold", std::isfinite(p.threshold) ? ordered_json(p.threshold)
                                                         : ordered_json()}});
        }
        doc["roc"] = ordered_json{{"points", std::move(points)}, {"auc", r.curve->auc}};
    }
    return doc.dump(indent) + "\n";
}

namespace {

constexpr double kPlotLeft = kSvgMargin;
constexpr double kPlotRight = kSvgWidth - kSvgMargin;
constexpr double kPlotTop = kSvgMargin;
constexpr double kPlotBottom = kSvgHeight - kSvgMargin;

double to_x(double fpr) { return kPlotLeft + fpr * (kPlotRight - kPlotLeft); }
double to_y(double tpr) { return kPlotBottom - tpr * (kPlotBottom - kPlotTop); }

// Up to three decimals, trailing zeros dropped: 50, 320.5, 123.457.
std::string coord(double v) {
    std::string s = fixed(v, 3);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const RocCurve& curve, std::string_view title) {
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSvgWidth
        << "\" height=\"" << kSvgHeight << "\" viewBox=\"0 0 " << kSvgWidth << ' ' << kSvgHeight
        << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << kSvgWidth << "\" height=\"" << kSvgHeight
        << "\" fill=\"white\"/>\n";
    svg << "  <text x=\"" << coord(kSvgWidth / 2.0) << "\" y=\"30\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << xml_escape(title) << "</text>\n";

    // Grid and tick labels every 0.2.
    for (int i = 0; i <= 5; ++i) {
        const double v = i / 5.0;
        const std::string label = fixed(v, 1);
        svg << "  <line class=\"grid\" x1=\"" << coord(to_x(v)) << "\" y1=\"" << coord(kPlotTop)
            << "\" x2=\"" << coord(to_x(v)) << "\" y2=\"" << coord(kPlotBottom)
            << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        svg << "  <line class=\"grid\" x1=\"" << coord(kPlotLeft) << "\" y1=\"" << coord(to_y(v))
            << "\" x2=\"" << coord(kPlotRight) << "\" y2=\"" << coord(to_y(v))
            << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        svg << "  <text x=\"" << coord(to_x(v)) << "\" y=\"" << coord(kPlotBottom + 16)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << label
            << "</text>\n";
        svg << "  <text x=\"" << coord(kPlotLeft - 6) << "\" y=\"" << coord(to_y(v) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << label
            << "</text>\n";
    }

    svg << "  <line class=\"axis\" x1=\"" << coord(kPlotLeft) << "\" y1=\"" << coord(kPlotBottom)
        << "\" x2=\"" << coord(kPlotRight) << "\" y2=\"" << coord(kPlotBottom)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "  <line class=\"axis\" x1=\"" << coord(kPlotLeft) << "\" y1=\"" << coord(kPlotBottom)
        << "\" x2=\"" << coord(kPlotLeft) << "\" y2=\"" << coord(kPlotTop)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "  <text x=\"" << coord((kPlotLeft + kPlotRight) / 2) << "\" y=\""
        << coord(kSvgHeight - 8) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"13\">False Positive Rate</text>\n";
    const std::string ylabel_x = "14";
    const std::string ylabel_y = coord((kPlotTop + kPlotBottom) / 2);
    svg << "  <text x=\"" << ylabel_x << "\" y=\"" << ylabel_y
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 " << ylabel_x << ' ' << ylabel_y
        << ")\">True Positive Rate</text>\n";

    svg << "  <line class=\"diagonal\" x1=\"" << coord(to_x(0)) << "\" y1=\"" << coord(to_y(0))
        << "\" x2=\"" << coord(to_x(1)) << "\" y2=\"" << coord(to_y(1))
        << "\" stroke=\"navy\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";

    svg << "  <polyline class=\"roc\" points=\"";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        if (i) svg << ' ';
        svg << coord(to_x(curve.points[i].fpr)) << ',' << coord(to_y(curve.points[i].tpr));
    }
    svg << "\" fill=\"none\" stroke=\"darkorange\" stroke-width=\"2\"/>\n";

    // Legend in the lower-right corner of the plot area.
    const double lx = kPlotRight - 150;
    const double ly = kPlotBottom - 40;
    svg << "  <rect x=\"" << coord(lx) << "\" y=\"" << coord(ly) << "\" width=\"140\" "
        << "height=\"30\" fill=\"white\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << coord(lx + 10) << "\" y1=\"" << coord(ly + 15) << "\" x2=\""
        << coord(lx + 35) << "\" y2=\"" << coord(ly + 15)
        << "\" stroke=\"darkorange\" stroke-width=\"2\"/>\n";
    svg << "  <text class=\"legend\" x=\"" << coord(lx + 42) << "\" y=\"" << coord(ly + 19)
        << "\" font-family=\"sans-serif\" font-size=\"12\">AUC = " << fixed(curve.auc, 3)
        << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace binclass
