#pragma once

#include "smellcloze/dataset.hpp"
#include "smellcloze/inference.hpp"
#include "smellcloze/prompt.hpp"
#include "smellcloze/rules.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace smellcloze::cli {

inline constexpr const char* kEndpointEnv = "SMELLCLOZE_ENDPOINT";

struct ScorerConfig {
    std::optional<inference::ScorerKind> kind;
    std::string endpoint;
    int max_seq_length = 512;
    inference::TruncateMethod truncate_method = inference::TruncateMethod::Tail;
    inference::Aggregation aggregation = inference::Aggregation::Max;
    std::size_t batch_size = 1;
    int timeout_seconds = 60;
    std::string train_config = "{}"; // JSON object forwarded to /train
};

struct SplitFractions {
    double train = 0.8;
    double val = 0.1;
    double test = 0.1;
};

struct RunConfig {
    rules::DetectorConfig detector;
    std::string template_spec = "P1"; // built-in name or spec text
    prompt::Verbalizer verbalizer = prompt::builtin_verbalizer("V1");
    ScorerConfig scorer;
    SplitFractions split;
    std::vector<std::size_t> sample_sizes{0, 64, 256, 512, 1024};
    dataset::SamplingMode sampling_mode = dataset::SamplingMode::Independent;
    std::uint64_t seed = 0;
    unsigned jobs = 0;
    bool deduplicate = true;
};

// Keys: detector, template, verbalizer, scorer{kind, endpoint,
// max_seq_length, truncate_method, aggregation, batch_size, timeout_seconds,
// train_config}, split{train, val, test}, sampling{sizes, mode}, seed, jobs,
// deduplicate. Missing keys keep their defaults; unknown keys and bad values
// throw ConfigError.
RunConfig run_config_from_json(std::string_view json_text);
RunConfig load_run_config(const std::filesystem::path& path);

dataset::SamplingMode parse_sampling_mode(std::string_view s); // ConfigError

// "V1", "V2", or a path to a verbalizer JSON file.
prompt::Verbalizer resolve_verbalizer(std::string_view name_or_path);

inference::ClassifyOptions classify_options(const RunConfig& cfg);

// Builds the configured scorer. The oracle takes its gold labels from
// `gold`; the remote endpoint must be set.
std::unique_ptr<inference::Scorer> make_scorer(const RunConfig& cfg, const dataset::Dataset* gold);

} // namespace smellcloze::cli
