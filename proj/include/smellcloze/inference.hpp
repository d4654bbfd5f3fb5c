#pragma once

#include "smellcloze/dataset.hpp"
#include "smellcloze/errors.hpp"
#include "smellcloze/prompt.hpp"
#include "smellcloze/rules.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace smellcloze::inference {

using rules::CombinedLabel;

enum class TruncateMethod { Head, Tail };

std::string_view to_string(TruncateMethod m);
TruncateMethod parse_truncate_method(std::string_view s); // ConfigError

struct ScoreRequest {
    std::string text; // rendered prompt, one mask marker
    std::vector<std::string> candidates;
    int max_seq_length = 512;
    TruncateMethod truncate_method = TruncateMethod::Tail;
    std::optional<std::string> checkpoint_id; // from a previous train() call

    // In-process metadata, never sent to a remote scorer.
    std::optional<std::string> sample_id;
    std::vector<CombinedLabel> candidate_labels; // aligned with candidates when set
};

// Throws MaskMissing unless the text holds the marker exactly once, and
// EmptyCandidates for an empty candidate list.
void validate(const ScoreRequest& req);

struct AnswerDistribution {
    std::vector<std::string> candidates;
    std::vector<double> probs; // aligned with candidates, sums to 1
};

struct Prediction {
    CombinedLabel label;
    std::array<double, CombinedLabel::kCount> class_probs{};
    std::string top_word;
    std::size_t top_word_index = 0;
};

enum class Aggregation {
    Max,  // class score = best word of the class
    Mean, // class score = mean over the words of the class
};

std::string_view to_string(Aggregation a);
Aggregation parse_aggregation(std::string_view s); // ConfigError

struct TrainRequest {
    dataset::Dataset data;
    std::string template_spec;
    prompt::Verbalizer verbalizer;
    std::string config_json = "{}"; // server-side overrides, passed through
};

class Scorer {
public:
    virtual ~Scorer() = default;

    // Unnormalized scores for req.candidates; score() validates them.
    virtual std::vector<double> raw_scores(const ScoreRequest& req) = 0;
    virtual std::vector<std::vector<double>> raw_scores_batch(std::span<const ScoreRequest> reqs);

    virtual bool supports_training() const { return false; }
    // Returns a checkpoint id for later requests. The default refuses.
    virtual std::string train(const TrainRequest& req);

    // Scorers that cannot serve overlapping calls return false and the
    // batch driver serializes them.
    virtual bool concurrent() const { return true; }
};

// Validates the request, calls the scorer and validates the returned
// scores (length, finite, non-negative, positive mass) before renormalizing
// over the candidate set. Throws InvalidDistribution on bad output.
AnswerDistribution score(Scorer& scorer, const ScoreRequest& req);
std::vector<AnswerDistribution> score_batch(Scorer& scorer, std::span<const ScoreRequest> reqs);

// Throws InvalidDistribution; returns probs / sum.
std::vector<double> normalize(std::span<const double> scores);

// top_word_index is the first index attaining the maximum. Under Max the
// label is the class of that word; under Mean it is the first class with
// the highest mean, where means within a relative 1e-12 count as equal.
// Throws UnmappedWord.
Prediction predict(const AnswerDistribution& dist, const std::map<std::string, CombinedLabel>& word_to_class,
                   Aggregation aggregation = Aggregation::Max);

// Indices of the k most probable candidates, highest first, ties by index.
std::vector<std::size_t> top_k(const AnswerDistribution& dist, std::size_t k);

struct ClassifyOptions {
    Aggregation aggregation = Aggregation::Max;
    int max_seq_length = 512;
    TruncateMethod truncate_method = TruncateMethod::Tail;
    std::optional<std::string> checkpoint_id;
    unsigned jobs = 0;          // worker threads; also the in-flight request cap
    std::size_t batch_size = 1; // requests per raw_scores_batch call
};

ScoreRequest make_request(const prompt::PromptTemplate& tmpl, const prompt::AnswerSpace& space,
                          std::string_view code, const ClassifyOptions& options = {});

Prediction classify(Scorer& scorer, const prompt::PromptTemplate& tmpl, const prompt::Verbalizer& verbalizer,
                    std::string_view code, const ClassifyOptions& options = {});

// Same as classify per sample; the request carries the sample id. Output is
// in input order.
std::vector<Prediction> classify_batch(Scorer& scorer, const prompt::PromptTemplate& tmpl,
                                       const prompt::Verbalizer& verbalizer,
                                       std::span<const dataset::Sample> samples, const ClassifyOptions& options = {});

// ---- backends --------------------------------------------------------------

// One-hot on the first candidate of the gold class. Requests must carry a
// known sample id and candidate labels.
class OracleScorer : public Scorer {
public:
    explicit OracleScorer(std::unordered_map<std::string, CombinedLabel> gold);
    static OracleScorer from_dataset(const dataset::Dataset& ds);

    std::vector<double> raw_scores(const ScoreRequest& req) override;

private:
    std::unordered_map<std::string, CombinedLabel> gold_;
};

// Deterministic pseudo-distribution seeded by (seed, text, candidates).
class HashScorer : public Scorer {
public:
    explicit HashScorer(std::uint64_t seed = 0) : seed_(seed) {}
    std::vector<double> raw_scores(const ScoreRequest& req) override;

private:
    std::uint64_t seed_;
};

struct Capabilities {
    std::string model;
    std::string mask_token;
    std::string multiword_mode; // "single_token" | "subword_mean"
};

// JSON over HTTP: GET /health, POST /score, /score_batch and /train.
class RemoteScorer : public Scorer {
public:
    explicit RemoteScorer(std::string endpoint, std::chrono::seconds timeout = std::chrono::seconds(60));

    const std::string& endpoint() const noexcept { return endpoint_; }
    Capabilities health();

    std::vector<double> raw_scores(const ScoreRequest& req) override;
    std::vector<std::vector<double>> raw_scores_batch(std::span<const ScoreRequest> reqs) override;
    bool supports_training() const override { return true; }
    std::string train(const TrainRequest& req) override;

private:
    std::string endpoint_;
    std::chrono::seconds timeout_;
};

// Wire bodies, exposed for tests and stub servers.
std::string request_to_json(const ScoreRequest& req);
std::string train_request_to_json(const TrainRequest& req);

enum class ScorerKind { Oracle, Hash, Remote };

std::string_view to_string(ScorerKind k);
ScorerKind parse_scorer_kind(std::string_view s); // ConfigError

struct ScorerParams {
    std::uint64_t seed = 0;
    std::optional<std::unordered_map<std::string, CombinedLabel>> gold; // oracle
    std::string endpoint;                                                 // remote
    std::chrono::seconds timeout{60};
};

// Throws ConfigError when the kind's required parameter is missing.
std::unique_ptr<Scorer> make_scorer(ScorerKind kind, const ScorerParams& params);

} // namespace smellcloze::inference
