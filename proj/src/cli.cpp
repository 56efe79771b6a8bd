#include "binclass/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <vector>

#include "binclass/counts.hpp"
#include "binclass/ingest.hpp"
#include "binclass/metrics.hpp"
#include "binclass/report.hpp"
#include "binclass/roc.hpp"

namespace binclass::cli {

namespace {

constexpr const char* kSvgTitle = "Receiver Operating Characteristic";

enum class OutputFormat { Text, Json };

struct Options {
    std::string input;
    std::optional<InputMode> mode;
    std::string positive_label = "1";
    std::optional<std::string> negative_label;
    std::string delimiter = ",";
    bool header = false;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> svg;
    std::optional<double> threshold;
    ZeroDivision zero_division = ZeroDivision::Undefined;
    bool strict = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App& sub, Options& o) {
    sub.add_option("input", o.input, "Prediction file, or - for standard input")->required();
    sub.add_option("--mode", o.mode, "Input rows: hard-labels (actual,predicted) or scores (actual,score)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, InputMode>{{"hard-labels", InputMode::HardLabels},
                                             {"scores", InputMode::Scores}}));
    sub.add_option("--positive-label", o.positive_label, "Label of the positive class")
        ->capture_default_str();
    sub.add_option("--negative-label", o.negative_label,
                   "Label of the negative class (default: every other label)");
    sub.add_option("--delimiter", o.delimiter, "Field separator: one character, or \\t")
        ->capture_default_str();
    sub.add_flag("--header", o.header, "Skip the first line");
    sub.add_option("--format", o.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{
            {"text", OutputFormat::Text}, {"json", OutputFormat::Json}}));
    sub.add_option("--threshold", o.threshold, "Decision threshold: score >= t is positive");
    sub.add_option("--zero-division", o.zero_division, "How undefined metrics are printed")
        ->transform(CLI::CheckedTransformer(std::map<std::string, ZeroDivision>{
            {"undefined", ZeroDivision::Undefined}, {"zero", ZeroDivision::Zero}}));
    sub.add_flag("--strict", o.strict, "Abort on the first malformed line");
}

char parse_delimiter(const std::string& d) {
    if (d == "\\t" || d == "tab") return '\t';
    if (d.size() != 1 || d == "\n" || d == "\r") {
        throw UsageError("--delimiter must be a single character, got '" + d + "'");
    }
    return d[0];
}

InputConfig input_config(const Options& o, InputMode mode) {
    InputConfig cfg;
    cfg.mode = mode;
    cfg.positive_label = o.positive_label;
    cfg.negative_label = o.negative_label;
    cfg.delimiter = parse_delimiter(o.delimiter);
    cfg.has_header = o.header;
    cfg.strict = o.strict;
    if (cfg.negative_label && *cfg.negative_label == cfg.positive_label) {
        throw UsageError("--negative-label must differ from --positive-label");
    }
    return cfg;
}

void check_threshold(const Options& o) {
    if (o.threshold && std::isnan(*o.threshold)) {
        throw UsageError("--threshold must be a number, got NaN");
    }
}

void check_input(const Options& o) {
    if (o.input == "-") return;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(o.input, ec)) {
        throw UsageError("input: file not found: " + o.input);
    }
}

template <typename Record>
ParseResult<Record> read_input(const Options& o, const InputConfig& cfg, std::istream& stdin_stream,
                               ParseResult<Record> (*parse)(std::istream&, const InputConfig&)) {
    if (o.input == "-") return parse(stdin_stream, cfg);
    std::ifstream file(o.input, std::ios::binary);
    if (!file) throw UsageError("input: cannot open " + o.input);
    return parse(file, cfg);
}

void warn_failures(const ParseReport& report, std::ostream& err) {
    for (const auto& f : report.failures) {
        err << "warning: line " << f.line << ": " << f.reason << '\n';
    }
}

ReportMeta make_meta(const std::string& command, const Options& o, const InputConfig& cfg,
                     const ParseReport& parsed) {
    ReportMeta meta;
    meta.command = command;
    meta.input = o.input;
    meta.config = cfg;
    meta.threshold = o.threshold;
    meta.zero_division = o.zero_division;
    meta.records_read = parsed.records_read;
    meta.records_accepted = parsed.records_accepted;
    meta.failures = parsed.failures.size();
    return meta;
}

void emit(const EvaluationReport& report, const Options& o, std::ostream& out) {
    out << (o.format == OutputFormat::Json ? render_json(report) : render_text(report));
}

int run_evaluate(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const InputMode mode = o.mode.value_or(InputMode::HardLabels);
    if (mode == InputMode::Scores && !o.threshold) {
        throw UsageError("--threshold is required with --mode scores");
    }
    if (mode == InputMode::HardLabels && o.threshold) {
        throw UsageError("--threshold requires --mode scores");
    }
    check_threshold(o);
    const InputConfig cfg = input_config(o, mode);
    check_input(o);

    EvaluationReport report;
    if (mode == InputMode::HardLabels) {
        const auto parsed = read_input(o, cfg, in, &parse_hard_labels);
        warn_failures(parsed.report, err);
        report.meta = make_meta("evaluate", o, cfg, parsed.report);
        report.metrics = all_metrics(from_predictions(parsed.records));
    } else {
        const auto parsed = read_input(o, cfg, in, &parse_scores);
        warn_failures(parsed.report, err);
        report.meta = make_meta("evaluate", o, cfg, parsed.report);
        report.metrics = all_metrics(from_predictions(apply_threshold(parsed.records, *o.threshold)));
    }
    emit(report, o, out);
    return kExitOk;
}

int run_roc(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    if (o.mode && *o.mode != InputMode::Scores) {
        throw UsageError("--mode: roc requires --mode scores");
    }
    check_threshold(o);
    const InputConfig cfg = input_config(o, InputMode::Scores);
    check_input(o);

    const auto parsed = read_input(o, cfg, in, &parse_scores);
    warn_failures(parsed.report, err);

    EvaluationReport report;
    report.meta = make_meta("roc", o, cfg, parsed.report);
    report.curve = roc_points(parsed.records);
    if (o.threshold) {
        report.metrics = all_metrics(from_predictions(apply_threshold(parsed.records, *o.threshold)));
    }

    if (o.svg) {
        std::ofstream file(*o.svg, std::ios::binary | std::ios::trunc);
        file << render_svg(*report.curve, kSvgTitle);
        if (!file.flush()) {
            err << "error: cannot write " << *o.svg << '\n';
            return kExitFailure;
        }
    }
    emit(report, o, out);
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Evaluate binary classifier predictions", "binclass"};
    app.require_subcommand(1);

    Options evaluate_opts;
    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "Confusion matrix and metrics for hard labels, or scores at --threshold");
    add_common_options(*evaluate, evaluate_opts);

    Options roc_opts;
    CLI::App* roc = app.add_subcommand("roc", "ROC curve and AUC from scores");
    add_common_options(*roc, roc_opts);
    roc->add_option("--svg", roc_opts.svg, "Write the ROC plot to this SVG file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (evaluate->parsed()) return run_evaluate(evaluate_opts, in, out, err);
        return run_roc(roc_opts, in, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const DegenerateInputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace binclass::cli
