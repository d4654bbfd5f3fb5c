#include "smellcloze/rules.hpp"

#include "smellcloze/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace smellcloze::rules {

namespace {

using FieldPtr = int DetectorConfig::*;

constexpr std::pair<std::string_view, FieldPtr> kFields[] = {
    {"lpl_designite_min_params", &DetectorConfig::lpl_designite_min_params},
    {"lpl_danphitsanuphan_min_params", &DetectorConfig::lpl_danphitsanuphan_min_params},
    {"lm_designite_min_loc", &DetectorConfig::lm_designite_min_loc},
    {"lm_marinescu_min_loc", &DetectorConfig::lm_marinescu_min_loc},
    {"lm_marinescu_min_cyclo", &DetectorConfig::lm_marinescu_min_cyclo},
    {"lm_marinescu_min_nesting", &DetectorConfig::lm_marinescu_min_nesting},
};

bool designite_lpl(const metrics::MethodMetrics& m, const DetectorConfig& cfg) {
    return m.nop >= cfg.lpl_designite_min_params;
}

bool danphitsanuphan_lpl(const metrics::MethodMetrics& m, const DetectorConfig& cfg) {
    return m.nop >= cfg.lpl_danphitsanuphan_min_params;
}

bool designite_lm(const metrics::MethodMetrics& m, const DetectorConfig& cfg) {
    return m.loc >= cfg.lm_designite_min_loc;
}

// Composite detection strategy: long, complex and deeply nested.
bool marinescu_lm(const metrics::MethodMetrics& m, const DetectorConfig& cfg) {
    return m.loc >= cfg.lm_marinescu_min_loc && m.cyclo >= cfg.lm_marinescu_min_cyclo &&
           m.max_nesting >= cfg.lm_marinescu_min_nesting;
}

} // namespace

void validate(const DetectorConfig& cfg) {
    for (auto [name, field] : kFields) {
        int floor = field == &DetectorConfig::lm_marinescu_min_nesting ? 0 : 1;
        if (cfg.*field < floor)
            throw ConfigError(std::string(name) + " must be >= " + std::to_string(floor));
    }
}

DetectorConfig detector_config_from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("detector config is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("detector config must be a JSON object");

    DetectorConfig cfg;
    for (const auto& [key, value] : j.items()) {
        FieldPtr target = nullptr;
        for (auto [name, field] : kFields)
            if (name == key)
                target = field;
        if (!target)
            throw ConfigError("unknown detector config key '" + key + "'");
        if (!value.is_number_integer())
            throw ConfigError("detector config key '" + key + "' must be an integer");
        cfg.*target = value.get<int>();
    }
    validate(cfg);
    return cfg;
}

DetectorConfig load_detector_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read detector config '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return detector_config_from_json(buf.str());
}

std::string to_json(const DetectorConfig& cfg) {
    nlohmann::ordered_json j;
    for (auto [name, field] : kFields)
        j[std::string(name)] = cfg.*field;
    return j.dump();
}

CombinedLabel::CombinedLabel(int value) : value_(value) {
    if (value < 0 || value >= kCount)
        throw InvalidLabel("combined label must be in 0..3, got " + std::to_string(value));
}

SmellVerdict detect(const metrics::MethodMetrics& m, const DetectorConfig& cfg) {
    SmellVerdict v;
    v.lpl = designite_lpl(m, cfg) && danphitsanuphan_lpl(m, cfg);
    v.lm = designite_lm(m, cfg) && marinescu_lm(m, cfg);
    return v;
}

CombinedLabel combine_labels(SmellVerdict v) noexcept {
    // bit 0: LPL, bit 1: LM
    return CombinedLabel((v.lpl ? 1 : 0) | (v.lm ? 2 : 0));
}

SmellVerdict split_label(CombinedLabel c) noexcept {
    return {(c.value() & 1) != 0, (c.value() & 2) != 0};
}

SmellVerdict split_label(int value) {
    return split_label(CombinedLabel(value));
}

} // namespace smellcloze::rules
