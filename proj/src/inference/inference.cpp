#include "smellcloze/inference.hpp"

#include "smellcloze/hash.hpp"
#include "smellcloze/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace smellcloze::inference {

std::string_view to_string(TruncateMethod m) {
    return m == TruncateMethod::Head ? "head" : "tail";
}

TruncateMethod parse_truncate_method(std::string_view s) {
    if (s == "head")
        return TruncateMethod::Head;
    if (s == "tail")
        return TruncateMethod::Tail;
    throw ConfigError("truncate_method must be 'head' or 'tail', got '" + std::string(s) + "'");
}

std::string_view to_string(Aggregation a) {
    return a == Aggregation::Max ? "max" : "mean";
}

Aggregation parse_aggregation(std::string_view s) {
    if (s == "max")
        return Aggregation::Max;
    if (s == "mean")
        return Aggregation::Mean;
    throw ConfigError("aggregation must be 'max' or 'mean', got '" + std::string(s) + "'");
}

std::string_view to_string(ScorerKind k) {
    switch (k) {
    case ScorerKind::Oracle: return "oracle";
    case ScorerKind::Hash: return "hash";
    case ScorerKind::Remote: return "remote";
    }
    return "?";
}

ScorerKind parse_scorer_kind(std::string_view s) {
    if (s == "oracle")
        return ScorerKind::Oracle;
    if (s == "hash")
        return ScorerKind::Hash;
    if (s == "remote")
        return ScorerKind::Remote;
    throw ConfigError("scorer must be one of oracle, hash, remote; got '" + std::string(s) + "'");
}

void validate(const ScoreRequest& req) {
    std::size_t count = 0;
    for (auto pos = req.text.find(prompt::kMaskMarker); pos != std::string::npos;
         pos = req.text.find(prompt::kMaskMarker, pos + prompt::kMaskMarker.size()))
        ++count;
    if (count != 1)
        throw MaskMissing("prompt must contain the mask marker exactly once, found " + std::to_string(count));
    if (req.candidates.empty())
        throw EmptyCandidates("score request has no candidate words");
    if (!req.candidate_labels.empty() && req.candidate_labels.size() != req.candidates.size())
        throw ScorerError("candidate labels are not aligned with candidates");
}

std::vector<std::vector<double>> Scorer::raw_scores_batch(std::span<const ScoreRequest> reqs) {
    std::vector<std::vector<double>> out;
    out.reserve(reqs.size());
    for (const auto& r : reqs)
        out.push_back(raw_scores(r));
    return out;
}

std::string Scorer::train(const TrainRequest&) {
    throw ScorerError("this scorer does not support training");
}

std::vector<double> normalize(std::span<const double> scores) {
    double total = 0.0;
    for (double s : scores) {
        if (!std::isfinite(s) || s < 0.0)
            throw InvalidDistribution("scores must be finite and non-negative");
        total += s;
    }
    if (!(total > 0.0) || !std::isfinite(total))
        throw InvalidDistribution("scores carry no probability mass");
    std::vector<double> out(scores.begin(), scores.end());
    for (auto& p : out)
        p /= total;
    return out;
}

namespace {

constexpr double kMeanTieTolerance = 1e-12;

AnswerDistribution finish(const ScoreRequest& req, const std::vector<double>& raw) {
    if (raw.size() != req.candidates.size())
        throw InvalidDistribution("scorer returned " + std::to_string(raw.size()) + " scores for " +
                                  std::to_string(req.candidates.size()) + " candidates");
    return AnswerDistribution{req.candidates, normalize(raw)};
}

} // namespace

AnswerDistribution score(Scorer& scorer, const ScoreRequest& req) {
    validate(req);
    return finish(req, scorer.raw_scores(req));
}

std::vector<AnswerDistribution> score_batch(Scorer& scorer, std::span<const ScoreRequest> reqs) {
    for (const auto& r : reqs)
        validate(r);
    auto raw = scorer.raw_scores_batch(reqs);
    if (raw.size() != reqs.size())
        throw InvalidDistribution("scorer returned " + std::to_string(raw.size()) + " results for " +
                                  std::to_string(reqs.size()) + " requests");
    std::vector<AnswerDistribution> out;
    out.reserve(reqs.size());
    for (std::size_t i = 0; i < reqs.size(); ++i)
        out.push_back(finish(reqs[i], raw[i]));
    return out;
}

Prediction predict(const AnswerDistribution& dist, const std::map<std::string, CombinedLabel>& word_to_class,
                   Aggregation aggregation) {
    if (dist.probs.size() != dist.candidates.size() || dist.probs.empty())
        throw InvalidDistribution("distribution is empty or not aligned with its candidates");

    std::vector<int> cls(dist.candidates.size());
    for (std::size_t i = 0; i < dist.candidates.size(); ++i) {
        auto it = word_to_class.find(dist.candidates[i]);
        if (it == word_to_class.end())
            throw UnmappedWord("candidate '" + dist.candidates[i] + "' has no class");
        cls[i] = it->second.value();
    }

    Prediction p;
    for (std::size_t i = 1; i < dist.probs.size(); ++i)
        if (dist.probs[i] > dist.probs[p.top_word_index])
            p.top_word_index = i;
    p.top_word = dist.candidates[p.top_word_index];

    std::array<double, CombinedLabel::kCount> agg{};
    std::array<int, CombinedLabel::kCount> members{};
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        auto c = static_cast<std::size_t>(cls[i]);
        if (aggregation == Aggregation::Max)
            agg[c] = std::max(agg[c], dist.probs[i]);
        else
            agg[c] += dist.probs[i];
        ++members[c];
    }
    if (aggregation == Aggregation::Mean)
        for (std::size_t c = 0; c < agg.size(); ++c)
            if (members[c])
                agg[c] /= members[c];

    double total = std::accumulate(agg.begin(), agg.end(), 0.0);
    for (std::size_t c = 0; c < agg.size(); ++c)
        p.class_probs[c] = total > 0.0 ? agg[c] / total : 0.0;

    if (aggregation == Aggregation::Max) {
        p.label = CombinedLabel(cls[p.top_word_index]);
    } else {
        std::size_t best = 0;
        // Means that differ only by rounding count as tied, so rescaling
        // the scores cannot move the label.
        for (std::size_t c = 1; c < agg.size(); ++c)
            if (agg[c] - agg[best] > kMeanTieTolerance * agg[best])
                best = c;
        p.label = CombinedLabel(static_cast<int>(best));
    }
    return p;
}

std::vector<std::size_t> top_k(const AnswerDistribution& dist, std::size_t k) {
    std::vector<std::size_t> idx(dist.probs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return dist.probs[a] > dist.probs[b]; });
    idx.resize(std::min(k, idx.size()));
    return idx;
}

ScoreRequest make_request(const prompt::PromptTemplate& tmpl, const prompt::AnswerSpace& space,
                          std::string_view code, const ClassifyOptions& options) {
    ScoreRequest req;
    req.text = prompt::fill(tmpl, code).text();
    req.candidates = space.words;
    req.candidate_labels.reserve(space.words.size());
    for (const auto& w : space.words)
        req.candidate_labels.push_back(space.word_to_class.at(w));
    req.max_seq_length = options.max_seq_length;
    req.truncate_method = options.truncate_method;
    req.checkpoint_id = options.checkpoint_id;
    return req;
}

Prediction classify(Scorer& scorer, const prompt::PromptTemplate& tmpl, const prompt::Verbalizer& verbalizer,
                    std::string_view code, const ClassifyOptions& options) {
    auto space = prompt::candidate_words(verbalizer);
    auto dist = score(scorer, make_request(tmpl, space, code, options));
    return predict(dist, space.word_to_class, options.aggregation);
}

std::vector<Prediction> classify_batch(Scorer& scorer, const prompt::PromptTemplate& tmpl,
                                       const prompt::Verbalizer& verbalizer,
                                       std::span<const dataset::Sample> samples, const ClassifyOptions& options) {
    auto space = prompt::candidate_words(verbalizer);
    const std::size_t batch = std::max<std::size_t>(1, options.batch_size);
    const std::size_t chunks = (samples.size() + batch - 1) / batch;
    const unsigned jobs = scorer.concurrent() ? options.jobs : 1;

    std::vector<Prediction> out(samples.size());
    parallel_for(chunks, jobs, [&](std::size_t chunk) {
        std::size_t begin = chunk * batch;
        std::size_t end = std::min(samples.size(), begin + batch);
        std::vector<ScoreRequest> reqs;
        reqs.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i) {
            reqs.push_back(make_request(tmpl, space, samples[i].code, options));
            reqs.back().sample_id = samples[i].id;
        }
        auto dists = score_batch(scorer, reqs);
        for (std::size_t i = begin; i < end; ++i)
            out[i] = predict(dists[i - begin], space.word_to_class, options.aggregation);
    });
    return out;
}

// ---- oracle ----------------------------------------------------------------

OracleScorer::OracleScorer(std::unordered_map<std::string, CombinedLabel> gold) : gold_(std::move(gold)) {}

OracleScorer OracleScorer::from_dataset(const dataset::Dataset& ds) {
    std::unordered_map<std::string, CombinedLabel> gold;
    gold.reserve(ds.size());
    for (const auto& s : ds.samples)
        gold.emplace(s.id, s.label);
    return OracleScorer(std::move(gold));
}

std::vector<double> OracleScorer::raw_scores(const ScoreRequest& req) {
    if (!req.sample_id)
        throw ScorerError("oracle scorer needs a sample id");
    auto it = gold_.find(*req.sample_id);
    if (it == gold_.end())
        throw ScorerError("oracle has no gold label for '" + *req.sample_id + "'");
    if (req.candidate_labels.size() != req.candidates.size())
        throw ScorerError("oracle scorer needs candidate labels");

    std::vector<double> out(req.candidates.size(), 0.0);
    for (std::size_t i = 0; i < req.candidate_labels.size(); ++i) {
        if (req.candidate_labels[i] == it->second) {
            out[i] = 1.0;
            return out;
        }
    }
    throw ScorerError("no candidate word for gold class " + std::to_string(it->second.value()));
}

// ---- hash ------------------------------------------------------------------

std::vector<double> HashScorer::raw_scores(const ScoreRequest& req) {
    std::uint64_t h = fnv1a64(req.text);
    for (const auto& c : req.candidates) {
        h = fnv1a64(std::string_view("\0", 1), h);
        h = fnv1a64(c, h);
    }
    std::mt19937_64 rng(mix64(seed_ ^ h));
    std::vector<double> out(req.candidates.size());
    for (auto& p : out)
        p = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53; // (0, 1]
    return out;
}

// ---- factory ---------------------------------------------------------------

std::unique_ptr<Scorer> make_scorer(ScorerKind kind, const ScorerParams& params) {
    switch (kind) {
    case ScorerKind::Oracle:
        if (!params.gold)
            throw ConfigError("oracle scorer needs gold labels");
        return std::make_unique<OracleScorer>(*params.gold);
    case ScorerKind::Hash:
        return std::make_unique<HashScorer>(params.seed);
    case ScorerKind::Remote:
        if (params.endpoint.empty())
            throw ConfigError("remote scorer needs an endpoint URL");
        return std::make_unique<RemoteScorer>(params.endpoint, params.timeout);
    }
    throw ConfigError("unknown scorer kind");
}

} // namespace smellcloze::inference
