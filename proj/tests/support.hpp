#pragma once

#include "smellcloze/dataset.hpp"
#include "smellcloze/ingest.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

inline std::filesystem::path fixtures() { return SMELLCLOZE_FIXTURES; }

inline std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string mini_project_root() { return (fixtures() / "mini-project").string(); }

inline const std::vector<std::string>& corpus_projects() {
    static const std::vector<std::string> names{"atlas", "borealis", "cobalt", "dune"};
    return names;
}

// Records of the synthetic corpus, projects in alphabetical order.
inline std::vector<smellcloze::ingest::MethodRecord> corpus_records() {
    std::vector<smellcloze::ingest::MethodRecord> all;
    for (const auto& p : corpus_projects()) {
        auto r = smellcloze::ingest::scan_project(fixtures() / "corpus" / p, p, 1);
        all.insert(all.end(), r.records.begin(), r.records.end());
    }
    return all;
}

inline const smellcloze::dataset::Dataset& corpus_dataset() {
    static const auto ds = smellcloze::dataset::build_dataset(corpus_records()).dataset;
    return ds;
}

// Rows of corpus/expected.jsonl.
inline std::vector<nlohmann::json> corpus_expected() {
    std::vector<nlohmann::json> rows;
    std::ifstream in(fixtures() / "corpus" / "expected.jsonl");
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            rows.push_back(nlohmann::json::parse(line));
    return rows;
}

// Pool of n distinct synthetic samples with labels cycling 0..3.
inline smellcloze::dataset::Dataset synthetic_pool(std::size_t n, const std::string& project = "pool") {
    std::vector<smellcloze::dataset::Sample> s;
    s.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::ostringstream id;
        id << project << "/" << std::setw(16) << std::setfill('0') << std::hex << i;
        s.push_back({id.str(), "void m" + std::to_string(i) + "() {}",
                     smellcloze::rules::CombinedLabel(static_cast<int>(i % 4))});
    }
    return smellcloze::dataset::make_dataset(std::move(s));
}

} // namespace testing
