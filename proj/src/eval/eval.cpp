#include "smellcloze/eval.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

namespace smellcloze::eval {

using json = nlohmann::ordered_json;

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
    for (std::size_t g = 0; g < kClasses; ++g)
        for (std::size_t p = 0; p < kClasses; ++p)
            counts[g][p] += other.counts[g][p];
}

std::uint64_t ConfusionMatrix::total() const noexcept {
    std::uint64_t n = 0;
    for (const auto& row : counts)
        for (auto c : row)
            n += c;
    return n;
}

std::uint64_t ConfusionMatrix::trace() const noexcept {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < kClasses; ++i)
        n += counts[i][i];
    return n;
}

ConfusionMatrix confusion(std::span<const CombinedLabel> golds, std::span<const CombinedLabel> preds) {
    if (golds.size() != preds.size())
        throw LengthMismatch("got " + std::to_string(golds.size()) + " gold labels and " +
                             std::to_string(preds.size()) + " predictions");
    if (golds.empty())
        throw EmptyInput("nothing to evaluate");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < golds.size(); ++i)
        cm.add(golds[i], preds[i]);
    return cm;
}

EvalReport weighted_metrics(const ConfusionMatrix& cm) {
    const auto n = cm.total();
    if (n == 0)
        throw EmptyMatrix("confusion matrix holds no samples");

    EvalReport r;
    r.n = n;
    r.accuracy = static_cast<double>(cm.trace()) / static_cast<double>(n);
    // support_i/n * tp_i/support_i reduces to tp_i/n, so the weighted recall
    // is summed over integers and matches accuracy bit for bit.
    std::uint64_t recalled = 0;
    for (std::size_t i = 0; i < kClasses; ++i) {
        std::uint64_t tp = cm.counts[i][i], predicted = 0, gold = 0;
        for (std::size_t j = 0; j < kClasses; ++j) {
            predicted += cm.counts[j][i];
            gold += cm.counts[i][j];
        }
        auto& c = r.per_class[i];
        c.support = gold;
        if (predicted)
            c.precision = static_cast<double>(tp) / static_cast<double>(predicted);
        else
            ++r.warnings.precision_zero_division;
        if (gold) {
            c.recall = static_cast<double>(tp) / static_cast<double>(gold);
            recalled += tp;
        } else {
            ++r.warnings.recall_zero_division;
        }
        if (c.precision + c.recall > 0.0)
            c.f1 = 2.0 * c.precision * c.recall / (c.precision + c.recall);
        else
            ++r.warnings.f1_zero_division;

        // divide once at the end so perfect predictions give exactly 1.0
        r.precision_w += static_cast<double>(gold) * c.precision;
        r.f1_w += static_cast<double>(gold) * c.f1;
    }
    r.precision_w /= static_cast<double>(n);
    r.f1_w /= static_cast<double>(n);
    r.recall_w = static_cast<double>(recalled) / static_cast<double>(n);
    return r;
}

namespace {

double round4(double x) {
    return std::round(x * 1e4) / 1e4;
}

json report_json(const EvalReport& r) {
    json j;
    j["accuracy"] = round4(r.accuracy);
    j["precision_w"] = round4(r.precision_w);
    j["recall_w"] = round4(r.recall_w);
    j["f1_w"] = round4(r.f1_w);
    json classes = json::array();
    for (std::size_t i = 0; i < kClasses; ++i) {
        const auto& c = r.per_class[i];
        classes.push_back({{"label", i},
                           {"precision", round4(c.precision)},
                           {"recall", round4(c.recall)},
                           {"f1", round4(c.f1)},
                           {"support", c.support}});
    }
    j["per_class"] = std::move(classes);
    j["n"] = r.n;
    j["warnings"] = {{"precision_zero_division", r.warnings.precision_zero_division},
                     {"recall_zero_division", r.warnings.recall_zero_division},
                     {"f1_zero_division", r.warnings.f1_zero_division}};
    return j;
}

RunReport build_run_report(const dataset::Dataset& ds, const std::vector<CombinedLabel>& predicted) {
    RunReport run;
    std::map<std::string, ConfusionMatrix> per_project;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto& s = ds.samples[i];
        run.matrix.add(s.label, predicted[i]);
        per_project[dataset::project_of(s.id)].add(s.label, predicted[i]);
    }
    run.overall = weighted_metrics(run.matrix);
    for (const auto& [project, cm] : per_project)
        run.per_project.emplace(project, weighted_metrics(cm));
    return run;
}

std::string fmt4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

} // namespace

std::string to_json(const EvalReport& r) {
    return report_json(r).dump();
}

std::string to_json(const RunReport& r) {
    json j = report_json(r.overall);
    json projects = json::object();
    for (const auto& [name, report] : r.per_project)
        projects[name] = report_json(report);
    j["per_project"] = std::move(projects);
    j["confusion_matrix"] = r.matrix.counts; // rows gold, columns predicted
    return j.dump(2);
}

RunReport evaluate_predictions(const dataset::Dataset& gold, const std::map<std::string, CombinedLabel>& predicted) {
    if (gold.empty())
        throw EmptyInput("nothing to evaluate");
    if (predicted.size() != gold.size())
        throw LengthMismatch("got " + std::to_string(gold.size()) + " gold samples and " +
                             std::to_string(predicted.size()) + " predictions");
    std::vector<CombinedLabel> preds;
    preds.reserve(gold.size());
    for (const auto& s : gold.samples) {
        auto it = predicted.find(s.id);
        if (it == predicted.end())
            throw LengthMismatch("no prediction for sample '" + s.id + "'");
        preds.push_back(it->second);
    }
    return build_run_report(gold, preds);
}

void write_predictions_jsonl(std::ostream& out, const dataset::Dataset& ds,
                             const std::vector<inference::Prediction>& predictions) {
    if (predictions.size() != ds.size())
        throw LengthMismatch("got " + std::to_string(ds.size()) + " samples and " +
                             std::to_string(predictions.size()) + " predictions");
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto& p = predictions[i];
        json j;
        j["id"] = ds.samples[i].id;
        j["label"] = p.label.value();
        j["top_word"] = p.top_word;
        j["class_probs"] = p.class_probs;
        out << j.dump() << '\n';
    }
}

std::map<std::string, CombinedLabel> read_predictions_jsonl(std::istream& in) {
    std::map<std::string, CombinedLabel> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw SchemaError(std::string("malformed JSON: ") + e.what(), number);
        }
        if (!j.is_object() || !j.contains("id") || !j["id"].is_string())
            throw SchemaError("prediction needs a string 'id'", number);
        if (!j.contains("label") || !j["label"].is_number_integer())
            throw SchemaError("prediction needs an integer 'label'", number);
        auto label = j["label"].get<long long>();
        if (label < 0 || label >= CombinedLabel::kCount)
            throw SchemaError("label " + std::to_string(label) + " outside 0..3", number);
        if (!out.emplace(j["id"].get<std::string>(), CombinedLabel(static_cast<int>(label))).second)
            throw SchemaError("repeated prediction id '" + j["id"].get<std::string>() + "'", number);
    }
    return out;
}

RunReport evaluate_run(inference::Scorer& scorer, const prompt::PromptTemplate& tmpl,
                       const prompt::Verbalizer& verbalizer, const dataset::Dataset& ds,
                       const inference::ClassifyOptions& options, std::vector<inference::Prediction>* predictions) {
    if (ds.empty())
        throw EmptyInput("cannot evaluate an empty dataset");
    auto preds = inference::classify_batch(scorer, tmpl, verbalizer, ds.samples, options);
    std::vector<CombinedLabel> labels;
    labels.reserve(preds.size());
    for (const auto& p : preds)
        labels.push_back(p.label);
    if (predictions)
        *predictions = std::move(preds);
    return build_run_report(ds, labels);
}

std::vector<GridCell> run_grid(inference::Scorer& scorer, const dataset::Dataset& ds,
                               const inference::ClassifyOptions& options, const std::vector<std::string>& templates,
                               const std::vector<std::string>& verbalizers) {
    std::vector<GridCell> cells;
    for (const auto& t : templates) {
        auto tmpl = prompt::builtin_template(t);
        for (const auto& v : verbalizers) {
            auto report = evaluate_run(scorer, tmpl, prompt::builtin_verbalizer(v), ds, options);
            cells.push_back(GridCell{t + "-" + v, report.overall});
        }
    }
    return cells;
}

void write_grid_csv(std::ostream& out, const std::vector<GridCell>& cells) {
    out << "cell,accuracy,precision_w,recall_w,f1_w\n";
    for (const auto& c : cells)
        out << c.name << ',' << fmt4(c.report.accuracy) << ',' << fmt4(c.report.precision_w) << ','
            << fmt4(c.report.recall_w) << ',' << fmt4(c.report.f1_w) << '\n';
}

std::vector<SmallSampleRow> run_small_sample(inference::Scorer& scorer, const dataset::SamplingSpec& spec,
                                             const dataset::Dataset& train, const dataset::Dataset& test,
                                             const prompt::PromptTemplate& tmpl,
                                             const prompt::Verbalizer& verbalizer,
                                             const inference::ClassifyOptions& options,
                                             const std::string& train_config_json) {
    auto subsets = dataset::subsample(train, spec);
    std::vector<SmallSampleRow> rows;
    for (const auto& [size, subset] : subsets) {
        SmallSampleRow row;
        row.size = size;
        auto run_options = options;
        if (size > 0 && scorer.supports_training()) {
            row.checkpoint_id =
                scorer.train(inference::TrainRequest{subset, tmpl.spec(), verbalizer, train_config_json});
            run_options.checkpoint_id = row.checkpoint_id;
        }
        row.report = evaluate_run(scorer, tmpl, verbalizer, test, run_options).overall;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_small_sample_csv(std::ostream& out, const std::vector<SmallSampleRow>& rows) {
    out << "size,trained,accuracy,precision_w,recall_w,f1_w\n";
    for (const auto& r : rows)
        out << r.size << ',' << (r.checkpoint_id ? "true" : "false") << ',' << fmt4(r.report.accuracy) << ','
            << fmt4(r.report.precision_w) << ',' << fmt4(r.report.recall_w) << ',' << fmt4(r.report.f1_w) << '\n';
}

} // namespace smellcloze::eval
