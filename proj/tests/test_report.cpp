#include <doctest.h>

#include <json.hpp>
#include <random>
#include <regex>

#include "binclass/report.hpp"
#include "oracles.hpp"
#include "xml_check.hpp"

using namespace binclass;

namespace {

constexpr auto P = Label::Positive;
constexpr auto N = Label::Negative;

EvaluationReport counts_report(const ConfusionCounts& c) {
    EvaluationReport r;
    r.meta.input = "preds.csv";
    r.meta.records_read = r.meta.records_accepted = c.total();
    r.metrics = all_metrics(c);
    return r;
}

RocCurve four_sample_curve() {
    return roc_points(std::vector<ScoredSample>{{0.9, P}, {0.8, N}, {0.7, P}, {0.6, N}});
}

bool has_line(const std::string& text, const std::string& line) {
    return text.find("\n" + line + "\n") != std::string::npos;
}

// Attribute values of the first element that carries `marker`.
std::string element_with(const std::string& svg, const std::string& marker) {
    const auto at = svg.find(marker);
    REQUIRE(at != std::string::npos);
    const auto start = svg.rfind('<', at);
    const auto end = svg.find('>', at);
    return svg.substr(start, end - start + 1);
}

std::string attr(const std::string& element, const std::string& name) {
    const std::regex re(" " + name + "=\"([^\"]*)\"");
    std::smatch m;
    REQUIRE(std::regex_search(element, m, re));
    return m[1];
}

}  // namespace

TEST_CASE("text report for the worked counts") {
    const auto text = render_text(counts_report({4, 1, 2, 3}));
    CHECK(has_line(text, "ACC 0.700000"));
    CHECK(has_line(text, "ERR 0.300000"));
    CHECK(has_line(text, "F1 0.727273"));
    CHECK(has_line(text, "MCC 0.408248"));
    CHECK(has_line(text, "P                  4           2"));
    CHECK(has_line(text, "N                  1           3"));
    CHECK(text == render_text(counts_report({4, 1, 2, 3})));
}

TEST_CASE("undefined metrics in text") {
    auto r = counts_report(empty());
    const auto text = render_text(r);
    for (const char* name : {"ERR", "ACC", "FPR", "TPR", "PRE", "REC", "F1", "SEN", "SPC", "TNR",
                             "MCC"}) {
        CHECK(has_line(text, std::string(name) + " undefined"));
    }
    r.meta.zero_division = ZeroDivision::Zero;
    const auto zero = render_text(r);
    CHECK(has_line(zero, "MCC 0.000000"));
    CHECK(has_line(zero, "zero_division: zero"));
    // The policy only affects rendering.
    CHECK_FALSE(r.metrics->mcc.has_value());
}

TEST_CASE("json report") {
    const auto doc = nlohmann::ordered_json::parse(render_json(counts_report({4, 1, 2, 3})));
    CHECK(doc["metrics"]["acc"].get<double>() == 0.7);
    CHECK(doc["metrics"]["pre"].get<double>() == 0.8);
    CHECK(doc["counts"]["tp"] == 4);
    CHECK(doc["counts"]["tn"] == 3);

    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"meta", "counts", "metrics"});
    std::vector<std::string> metric_keys;
    for (const auto& [k, v] : doc["metrics"].items()) metric_keys.push_back(k);
    CHECK(metric_keys == std::vector<std::string>{"err", "acc", "fpr", "tpr", "pre", "rec", "f1",
                                                  "sen", "spc", "tnr", "mcc"});

    const auto empty_doc = nlohmann::json::parse(render_json(counts_report(empty())));
    for (const auto& [k, v] : empty_doc["metrics"].items()) CHECK(v.is_null());
}

TEST_CASE("json roc section") {
    EvaluationReport r;
    r.meta.command = "roc";
    r.curve = four_sample_curve();
    const auto doc = nlohmann::json::parse(render_json(r));
    CHECK_FALSE(doc.contains("metrics"));
    CHECK(doc["roc"]["auc"].get<double>() == 0.75);
    REQUIRE(doc["roc"]["points"].size() == 5);
    CHECK(doc["roc"]["points"][0]["threshold"].is_null());
    CHECK(doc["roc"]["points"][2]["fpr"].get<double>() == 0.5);
    CHECK(doc["roc"]["points"][4]["threshold"].get<double>() == 0.6);
}

TEST_CASE("property: json round-trips metric values exactly") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto c = oracle::random_counts(rng, 1'000'000'000);
        const auto r = counts_report(c);
        const auto doc = nlohmann::json::parse(render_json(r));
        CHECK(doc["counts"]["tp"].get<std::uint64_t>() == c.tp);
        CHECK(doc["counts"]["fp"].get<std::uint64_t>() == c.fp);
        CHECK(doc["counts"]["fn"].get<std::uint64_t>() == c.fn);
        CHECK(doc["counts"]["tn"].get<std::uint64_t>() == c.tn);
        const auto& m = *r.metrics;
        const std::pair<const char*, const MetricValue*> fields[] = {
            {"err", &m.err}, {"acc", &m.acc}, {"fpr", &m.fpr}, {"tpr", &m.tpr},
            {"pre", &m.pre}, {"rec", &m.rec}, {"f1", &m.f1},   {"sen", &m.sen},
            {"spc", &m.spc}, {"tnr", &m.tnr}, {"mcc", &m.mcc}};
        for (const auto& [key, value] : fields) {
            if (*value) {
                CHECK(doc["metrics"][key].get<double>() == **value);
            } else {
                CHECK(doc["metrics"][key].is_null());
            }
        }
    }
}

TEST_CASE("svg structure") {
    const auto curve = four_sample_curve();
    const auto svg = render_svg(curve, "ROC <test> & co");
    std::string why;
    CHECK_MESSAGE(testing::well_formed_xml(svg, &why), why);
    CHECK(svg == render_svg(curve, "ROC <test> & co"));
    CHECK(svg.find("width=\"640\" height=\"480\"") != std::string::npos);
    CHECK(svg.find(">False Positive Rate</text>") != std::string::npos);
    CHECK(svg.find(">True Positive Rate</text>") != std::string::npos);
    CHECK(svg.find(">AUC = 0.750</text>") != std::string::npos);
    CHECK(svg.find("ROC &lt;test&gt; &amp; co") != std::string::npos);

    // Only the SVG 1.1 subset is used.
    const std::regex tag("<([a-z]+)");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator();
         ++it) {
        const std::string name = (*it)[1];
        CHECK_MESSAGE((name == "svg" || name == "rect" || name == "line" || name == "polyline" ||
                       name == "text"),
                      name);
    }

    // Data (0,0) is the plot's bottom-left corner and (1,1) its top-right.
    const auto diag = element_with(svg, "class=\"diagonal\"");
    CHECK(attr(diag, "x1") == "50");
    CHECK(attr(diag, "y1") == "430");
    CHECK(attr(diag, "x2") == "590");
    CHECK(attr(diag, "y2") == "50");
    CHECK(attr(diag, "stroke-dasharray") == "6,4");

    const auto poly = element_with(svg, "class=\"roc\"");
    CHECK(attr(poly, "points") == "50,430 50,240 320,240 320,50 590,50");
}

TEST_CASE("svg polyline for the tie curve lies on the diagonal") {
    const auto curve = roc_points(std::vector<ScoredSample>{{0.5, P}, {0.5, N}});
    const auto svg = render_svg(curve, "tie");
    const auto poly = element_with(svg, "class=\"roc\"");
    const auto diag = element_with(svg, "class=\"diagonal\"");
    CHECK(attr(poly, "points") ==
          attr(diag, "x1") + "," + attr(diag, "y1") + " " + attr(diag, "x2") + "," + attr(diag, "y2"));
    CHECK(svg.find(">AUC = 0.500</text>") != std::string::npos);
}

TEST_CASE("svg for a perfect classifier passes through the top-left corner") {
    const auto curve = roc_points(std::vector<ScoredSample>{{0.9, P}, {0.8, P}, {0.1, N}});
    const auto poly = element_with(render_svg(curve, "perfect"), "class=\"roc\"");
    CHECK(attr(poly, "points").find("50,50") != std::string::npos);
}
