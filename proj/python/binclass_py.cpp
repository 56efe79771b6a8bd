#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "binclass/cli.hpp"
#include "binclass/counts.hpp"
#include "binclass/metrics.hpp"
#include "binclass/report.hpp"
#include "binclass/roc.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace binclass;

namespace {

Label to_label(bool positive) { return positive ? Label::Positive : Label::Negative; }

std::vector<ScoredSample> zip_scores(const std::vector<double>& scores,
                                     const std::vector<bool>& actual) {
    if (scores.size() != actual.size()) {
        throw std::invalid_argument("scores and actual must have the same length");
    }
    std::vector<ScoredSample> out(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) out[i] = {scores[i], to_label(actual[i])};
    return out;
}

py::dict metrics_dict(const MetricSet& m) {
    py::dict d;
    d["err"] = m.err;
    d["acc"] = m.acc;
    d["fpr"] = m.fpr;
    d["tpr"] = m.tpr;
    d["pre"] = m.pre;
    d["rec"] = m.rec;
    d["f1"] = m.f1;
    d["sen"] = m.sen;
    d["spc"] = m.spc;
    d["tnr"] = m.tnr;
    d["mcc"] = m.mcc;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Binary classifier evaluation: confusion counts, metrics, ROC and AUC";

    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);

    py::enum_<Label>(m, "Label")
        .value("Positive", Label::Positive)
        .value("Negative", Label::Negative);

    py::class_<ConfusionCounts>(m, "ConfusionCounts")
        .def(py::init<>())
        .def(py::init([](std::uint64_t tp, std::uint64_t fp, std::uint64_t fn, std::uint64_t tn) {
                 return ConfusionCounts{tp, fp, fn, tn};
             }),
             "tp"_a, "fp"_a, "fn"_a, "tn"_a)
        .def_readwrite("tp", &ConfusionCounts::tp)
        .def_readwrite("fp", &ConfusionCounts::fp)
        .def_readwrite("fn", &ConfusionCounts::fn)
        .def_readwrite("tn", &ConfusionCounts::tn)
        .def("positives", &ConfusionCounts::positives)
        .def("negatives", &ConfusionCounts::negatives)
        .def("total", &ConfusionCounts::total)
        .def(py::self == py::self)
        .def("__repr__", [](const ConfusionCounts& c) {
            std::ostringstream s;
            s << "ConfusionCounts(tp=" << c.tp << ", fp=" << c.fp << ", fn=" << c.fn
              << ", tn=" << c.tn << ")";
            return s.str();
        });

    m.def("empty", &empty);
    m.def(
        "record",
        [](const ConfusionCounts& c, bool actual, bool predicted) {
            return record(c, {to_label(actual), to_label(predicted)});
        },
        "counts"_a, "actual"_a, "predicted"_a);
    m.def("merge", &merge, "a"_a, "b"_a);
    m.def(
        "from_predictions",
        [](const std::vector<bool>& actual, const std::vector<bool>& predicted) {
            if (actual.size() != predicted.size()) {
                throw std::invalid_argument("actual and predicted must have the same length");
            }
            std::vector<LabeledPrediction> pairs(actual.size());
            for (std::size_t i = 0; i < actual.size(); ++i) {
                pairs[i] = {to_label(actual[i]), to_label(predicted[i])};
            }
            return from_predictions(pairs);
        },
        "actual"_a, "predicted"_a,
        "Tally parallel sequences of booleans (True = positive class).");
    m.def(
        "binarize",
        [](const std::string& actual, const std::string& positive) {
            return binarize(actual, positive);
        },
        "actual_class"_a, "positive_class"_a);
    m.def(
        "apply_threshold",
        [](const std::vector<double>& scores, double threshold) {
            std::vector<ScoredSample> samples(scores.size());
            for (std::size_t i = 0; i < scores.size(); ++i) samples[i] = {scores[i], Label::Negative};
            std::vector<bool> predicted;
            for (const auto& p : apply_threshold(samples, threshold)) {
                predicted.push_back(p.predicted == Label::Positive);
            }
            return predicted;
        },
        "scores"_a, "threshold"_a, "Predicted-positive mask: score >= threshold.");

    m.def("error_rate", &error_rate);
    m.def("accuracy", &accuracy);
    m.def("false_positive_rate", &false_positive_rate);
    m.def("true_positive_rate", &true_positive_rate);
    m.def("recall", &recall);
    m.def("sensitivity", &sensitivity);
    m.def("precision", &precision);
    m.def("f1_score", &f1_score);
    m.def("specificity", &specificity);
    m.def("true_negative_rate", &true_negative_rate);
    m.def("matthews_corrcoef", &matthews_corrcoef);
    m.def(
        "all_metrics", [](const ConfusionCounts& c) { return metrics_dict(all_metrics(c)); },
        "counts"_a, "All metrics by short name; undefined values are None.");

    py::class_<RocCurve>(m, "RocCurve")
        .def_property_readonly("points",
                               [](const RocCurve& c) {
                                   py::list pts;
                                   for (const auto& p : c.points) {
                                       pts.append(py::make_tuple(p.fpr, p.tpr, p.threshold));
                                   }
                                   return pts;
                               })
        .def_readonly("auc", &RocCurve::auc);

    m.def(
        "roc_points",
        [](const std::vector<double>& scores, const std::vector<bool>& actual) {
            return roc_points(zip_scores(scores, actual));
        },
        "scores"_a, "actual"_a);
    m.def("auc_trapezoid", &auc_trapezoid, "curve"_a);
    m.def(
        "auc_pair_count",
        [](const std::vector<double>& scores, const std::vector<bool>& actual) {
            return auc_pair_count(zip_scores(scores, actual));
        },
        "scores"_a, "actual"_a);

    py::enum_<DiagonalPosition>(m, "DiagonalPosition")
        .value("Above", DiagonalPosition::Above)
        .value("On", DiagonalPosition::On)
        .value("Below", DiagonalPosition::Below);
    m.def(
        "diagonal_position",
        [](double fpr, double tpr) { return diagonal_position({fpr, tpr, 0.0}); }, "fpr"_a,
        "tpr"_a);

    m.def("render_svg", &render_svg, "curve"_a, "title"_a = "Receiver Operating Characteristic");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args, const std::string& stdin_text) {
            std::istringstream in(stdin_text);
            std::ostringstream out, err;
            const int status = cli::run(args, in, out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        "args"_a, "stdin"_a = "", "Run the command-line tool in-process: (status, stdout, stderr).");
}
