#pragma once

#include "smellcloze/metrics.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

namespace smellcloze::rules {

// Thresholds use ">= min" semantics. Tool phrasings of the form "more than
// N" are stored as N + 1.
struct DetectorConfig {
    int lpl_designite_min_params = 6;
    int lpl_danphitsanuphan_min_params = 6;
    int lm_designite_min_loc = 101;
    int lm_marinescu_min_loc = 31;
    int lm_marinescu_min_cyclo = 10;
    int lm_marinescu_min_nesting = 3;

    bool operator==(const DetectorConfig&) const = default;
};

// Throws ConfigError when a threshold is out of range (all >= 1, nesting >= 0).
void validate(const DetectorConfig& cfg);

// JSON object with any subset of the DetectorConfig field names. Missing
// fields keep their defaults; unknown keys are rejected with ConfigError.
DetectorConfig detector_config_from_json(std::string_view json_text);
DetectorConfig load_detector_config(const std::filesystem::path& path);
std::string to_json(const DetectorConfig& cfg);

struct SmellVerdict {
    bool lpl = false; // Long Parameter List
    bool lm = false;  // Long Method

    bool operator==(const SmellVerdict&) const = default;
};

// Label-powerset class of a verdict: 0 none, 1 LPL, 2 LM, 3 both.
class CombinedLabel {
public:
    static constexpr int kCount = 4;

    constexpr CombinedLabel() = default;
    // Throws InvalidLabel outside 0..3.
    explicit CombinedLabel(int value);

    constexpr int value() const noexcept { return value_; }
    constexpr auto operator<=>(const CombinedLabel&) const = default;

private:
    int value_ = 0;
};

inline constexpr std::array<std::string_view, CombinedLabel::kCount> kLabelNames = {
    "none", "long parameter list", "long method", "long method and long parameter list"};

// A smell is reported only when both of its detectors agree.
SmellVerdict detect(const metrics::MethodMetrics& m, const DetectorConfig& cfg = {});

CombinedLabel combine_labels(SmellVerdict v) noexcept;
SmellVerdict split_label(CombinedLabel c) noexcept;
// Throws InvalidLabel for values outside 0..3.
SmellVerdict split_label(int value);

} // namespace smellcloze::rules
