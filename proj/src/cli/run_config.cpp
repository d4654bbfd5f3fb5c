#include "smellcloze/run_config.hpp"

#include "smellcloze/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <type_traits>

namespace smellcloze::cli {

using json = nlohmann::json;

namespace {

void only_keys(const json& j, std::string_view where, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object())
        throw ConfigError(std::string(where) + " must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (auto a : allowed)
            known = known || a == key;
        if (!known)
            throw ConfigError("unknown " + std::string(where) + " key '" + key + "'");
    }
}

template <typename T>
T get(const json& j, const char* key, std::string_view where) {
    const auto& v = j.at(key);
    bool ok = true;
    if constexpr (std::is_unsigned_v<T> && !std::is_same_v<T, bool>)
        ok = v.is_number_unsigned();
    else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>)
        ok = v.is_number_integer();
    else if constexpr (std::is_same_v<T, std::vector<std::size_t>>)
        ok = v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number_unsigned(); });
    if (!ok)
        throw ConfigError(std::string(where) + "." + key + " has the wrong type");
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string(where) + "." + key + " has the wrong type");
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void apply_scorer(ScorerConfig& s, const json& j) {
    only_keys(j, "scorer", {"kind", "endpoint", "max_seq_length", "truncate_method", "aggregation", "batch_size",
                            "timeout_seconds", "train_config"});
    if (j.contains("kind"))
        s.kind = inference::parse_scorer_kind(get<std::string>(j, "kind", "scorer"));
    if (j.contains("endpoint"))
        s.endpoint = get<std::string>(j, "endpoint", "scorer");
    if (j.contains("max_seq_length"))
        s.max_seq_length = get<int>(j, "max_seq_length", "scorer");
    if (j.contains("truncate_method"))
        s.truncate_method = inference::parse_truncate_method(get<std::string>(j, "truncate_method", "scorer"));
    if (j.contains("aggregation"))
        s.aggregation = inference::parse_aggregation(get<std::string>(j, "aggregation", "scorer"));
    if (j.contains("batch_size"))
        s.batch_size = get<std::size_t>(j, "batch_size", "scorer");
    if (j.contains("timeout_seconds"))
        s.timeout_seconds = get<int>(j, "timeout_seconds", "scorer");
    if (j.contains("train_config")) {
        if (!j["train_config"].is_object())
            throw ConfigError("scorer.train_config must be a JSON object");
        s.train_config = j["train_config"].dump();
    }
    if (s.max_seq_length < 1)
        throw ConfigError("scorer.max_seq_length must be positive");
    if (s.batch_size < 1)
        throw ConfigError("scorer.batch_size must be positive");
    if (s.timeout_seconds < 1)
        throw ConfigError("scorer.timeout_seconds must be positive");
}

} // namespace

dataset::SamplingMode parse_sampling_mode(std::string_view s) {
    if (s == "independent")
        return dataset::SamplingMode::Independent;
    if (s == "nested")
        return dataset::SamplingMode::Nested;
    throw ConfigError("sampling mode must be 'independent' or 'nested', got '" + std::string(s) + "'");
}

prompt::Verbalizer resolve_verbalizer(std::string_view name_or_path) {
    const auto& builtins = prompt::builtin_verbalizers();
    if (auto it = builtins.find(std::string(name_or_path)); it != builtins.end())
        return it->second;
    return prompt::verbalizer_from_json(read_file(std::filesystem::path(name_or_path)));
}

RunConfig run_config_from_json(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("run config is not valid JSON: ") + e.what());
    }
    only_keys(j, "run config",
              {"detector", "template", "verbalizer", "scorer", "split", "sampling", "seed", "jobs", "deduplicate"});

    RunConfig cfg;
    if (j.contains("detector"))
        cfg.detector = rules::detector_config_from_json(j["detector"].dump());
    if (j.contains("template"))
        cfg.template_spec = get<std::string>(j, "template", "run config");
    if (j.contains("verbalizer")) {
        const auto& v = j["verbalizer"];
        cfg.verbalizer = v.is_string() ? resolve_verbalizer(v.get<std::string>())
                                       : prompt::verbalizer_from_json(v.dump());
    }
    if (j.contains("scorer"))
        apply_scorer(cfg.scorer, j["scorer"]);
    if (j.contains("split")) {
        const auto& s = j["split"];
        only_keys(s, "split", {"train", "val", "test"});
        if (s.contains("train"))
            cfg.split.train = get<double>(s, "train", "split");
        if (s.contains("val"))
            cfg.split.val = get<double>(s, "val", "split");
        if (s.contains("test"))
            cfg.split.test = get<double>(s, "test", "split");
    }
    if (j.contains("sampling")) {
        const auto& s = j["sampling"];
        only_keys(s, "sampling", {"sizes", "mode"});
        if (s.contains("sizes"))
            cfg.sample_sizes = get<std::vector<std::size_t>>(s, "sizes", "sampling");
        if (s.contains("mode"))
            cfg.sampling_mode = parse_sampling_mode(get<std::string>(s, "mode", "sampling"));
    }
    if (j.contains("seed"))
        cfg.seed = get<std::uint64_t>(j, "seed", "run config");
    if (j.contains("jobs"))
        cfg.jobs = get<unsigned>(j, "jobs", "run config");
    if (j.contains("deduplicate"))
        cfg.deduplicate = get<bool>(j, "deduplicate", "run config");

    prompt::resolve_template(cfg.template_spec); // reject bad templates at load time
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    return run_config_from_json(read_file(path));
}

inference::ClassifyOptions classify_options(const RunConfig& cfg) {
    inference::ClassifyOptions o;
    o.aggregation = cfg.scorer.aggregation;
    o.max_seq_length = cfg.scorer.max_seq_length;
    o.truncate_method = cfg.scorer.truncate_method;
    o.jobs = cfg.jobs;
    o.batch_size = cfg.scorer.batch_size;
    return o;
}

std::unique_ptr<inference::Scorer> make_scorer(const RunConfig& cfg, const dataset::Dataset* gold) {
    if (!cfg.scorer.kind)
        throw ConfigError("no scorer configured (use --scorer oracle|hash|remote)");
    inference::ScorerParams params;
    params.seed = cfg.seed;
    params.endpoint = cfg.scorer.endpoint;
    params.timeout = std::chrono::seconds(cfg.scorer.timeout_seconds);
    if (*cfg.scorer.kind == inference::ScorerKind::Oracle && gold) {
        params.gold.emplace();
        for (const auto& s : gold->samples)
            params.gold->emplace(s.id, s.label);
    }
    return inference::make_scorer(*cfg.scorer.kind, params);
}

} // namespace smellcloze::cli
