#pragma once

#include "smellcloze/dataset.hpp"
#include "smellcloze/errors.hpp"
#include "smellcloze/inference.hpp"
#include "smellcloze/prompt.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace smellcloze::eval {

using rules::CombinedLabel;

inline constexpr std::size_t kClasses = CombinedLabel::kCount;

class EmptyMatrix : public Error {
public:
    using Error::Error;
};

// Rows are gold classes, columns predicted classes.
struct ConfusionMatrix {
    std::array<std::array<std::uint64_t, kClasses>, kClasses> counts{};

    void add(CombinedLabel gold, CombinedLabel predicted) {
        ++counts[static_cast<std::size_t>(gold.value())][static_cast<std::size_t>(predicted.value())];
    }
    void merge(const ConfusionMatrix& other);
    std::uint64_t total() const noexcept;
    std::uint64_t trace() const noexcept;

    bool operator==(const ConfusionMatrix&) const = default;
};

// Throws LengthMismatch and EmptyInput.
ConfusionMatrix confusion(std::span<const CombinedLabel> golds, std::span<const CombinedLabel> preds);

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::uint64_t support = 0; // gold count
};

// How often a 0/0 was replaced by 0.
struct Warnings {
    std::size_t precision_zero_division = 0;
    std::size_t recall_zero_division = 0;
    std::size_t f1_zero_division = 0;
};

struct EvalReport {
    double accuracy = 0.0;
    double precision_w = 0.0;
    double recall_w = 0.0;
    double f1_w = 0.0;
    std::array<ClassMetrics, kClasses> per_class{};
    std::uint64_t n = 0;
    Warnings warnings;
};

// Per-class metrics weighted by gold support; accuracy = trace / total.
// Throws EmptyMatrix for an all-zero matrix.
EvalReport weighted_metrics(const ConfusionMatrix& cm);

// Values rounded to 4 decimals.
std::string to_json(const EvalReport& r);

struct RunReport {
    EvalReport overall;
    std::map<std::string, EvalReport> per_project; // keyed by sample-id project
    ConfusionMatrix matrix;
};

// Overall metrics at the top level, plus per_project and confusion_matrix.
std::string to_json(const RunReport& r);

// Gold labels from `gold`, predictions looked up by sample id. Throws
// LengthMismatch when the id sets differ and EmptyInput for an empty set.
RunReport evaluate_predictions(const dataset::Dataset& gold, const std::map<std::string, CombinedLabel>& predicted);

// JSONL, one {"id", "label", "top_word", "class_probs"} per line.
void write_predictions_jsonl(std::ostream& out, const dataset::Dataset& ds,
                             const std::vector<inference::Prediction>& predictions);
// id -> label. Throws SchemaError with the line number on malformed rows or
// repeated ids.
std::map<std::string, CombinedLabel> read_predictions_jsonl(std::istream& in);

// Classifies every sample and evaluates. Throws EmptyInput.
RunReport evaluate_run(inference::Scorer& scorer, const prompt::PromptTemplate& tmpl,
                       const prompt::Verbalizer& verbalizer, const dataset::Dataset& ds,
                       const inference::ClassifyOptions& options = {},
                       std::vector<inference::Prediction>* predictions = nullptr);

struct GridCell {
    std::string name; // "P1-V1"
    EvalReport report;
};

// Templates outer, verbalizers inner: P1-V1, P1-V2, P2-V1, ...
std::vector<GridCell> run_grid(inference::Scorer& scorer, const dataset::Dataset& ds,
                               const inference::ClassifyOptions& options = {},
                               const std::vector<std::string>& templates = {"P1", "P2", "P3"},
                               const std::vector<std::string>& verbalizers = {"V1", "V2"});

// Header `cell,accuracy,precision_w,recall_w,f1_w`, 4 decimals.
void write_grid_csv(std::ostream& out, const std::vector<GridCell>& cells);

struct SmallSampleRow {
    std::size_t size = 0;
    std::optional<std::string> checkpoint_id; // set when a training call was made
    EvalReport report;
};

// For each sampled size: train on the subset when the scorer supports it and
// the size is positive, then evaluate on `test`. Size 0 is always zero-shot.
std::vector<SmallSampleRow> run_small_sample(inference::Scorer& scorer, const dataset::SamplingSpec& spec,
                                             const dataset::Dataset& train, const dataset::Dataset& test,
                                             const prompt::PromptTemplate& tmpl,
                                             const prompt::Verbalizer& verbalizer,
                                             const inference::ClassifyOptions& options = {},
                                             const std::string& train_config_json = "{}");

// Header `size,trained,accuracy,precision_w,recall_w,f1_w`, 4 decimals.
void write_small_sample_csv(std::ostream& out, const std::vector<SmallSampleRow>& rows);

} // namespace smellcloze::eval
