#pragma once

#include "smellcloze/ingest.hpp"
#include "smellcloze/rules.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace smellcloze::dataset {

using rules::CombinedLabel;

struct Sample {
    std::string id; // "<project>/<16 hex digits>"
    std::string code;
    CombinedLabel label;

    bool operator==(const Sample&) const = default;
};

struct Dataset {
    std::vector<Sample> samples;
    std::map<std::string, std::size_t> provenance; // project -> sample count

    std::size_t size() const noexcept { return samples.size(); }
    bool empty() const noexcept { return samples.empty(); }
};

// Validates id uniqueness and non-empty code, and derives provenance from
// the ids. Throws SchemaError on violation.
Dataset make_dataset(std::vector<Sample> samples);

std::string sample_id(const ingest::MethodRecord& record);
// Project part of a sample id (everything before the last '/').
std::string project_of(const std::string& sample_id);

struct BuildOptions {
    bool deduplicate = true; // drop records whose body_text was already seen
    unsigned jobs = 0;
};

struct BuildResult {
    Dataset dataset;
    std::size_t duplicates_removed = 0;
};

// label = combine_labels(detect(metrics(record))). Throws EmptyInput for an
// empty record list and propagates SyntaxError from metric computation.
BuildResult build_dataset(const std::vector<ingest::MethodRecord>& records, const rules::DetectorConfig& cfg = {},
                          const BuildOptions& options = {});

struct Split {
    Dataset train;
    Dataset val;
    Dataset test;
};

// Disjoint partition with sizes round(n*train), round(n*val) and the rest,
// stratified by label and deterministic for a seed. Each part keeps the
// input order. Throws BadFractions unless the fractions are in [0,1] and sum
// to 1 within 1e-9.
Split split(const Dataset& ds, double train_frac, double val_frac, double test_frac, std::uint64_t seed);

enum class SamplingMode {
    Independent, // each size drawn on its own from the pool
    Nested,      // smaller subsets are prefixes of one shuffled order
};

struct SamplingSpec {
    std::vector<std::size_t> sizes{0, 64, 256, 512, 1024};
    std::uint64_t seed = 0;
    SamplingMode mode = SamplingMode::Independent;
};

// Uniform draws without replacement, one per size. Throws SizeExceedsPool
// when a size exceeds the pool.
std::map<std::size_t, Dataset> subsample(const Dataset& train, const SamplingSpec& spec);

using Histogram = std::array<std::size_t, CombinedLabel::kCount>;

Histogram label_histogram(const Dataset& ds);
// {"0": n0, "1": n1, "2": n2, "3": n3}
std::string histogram_json(const Histogram& h);

// JSONL, one {"id": str, "code": str, "label": int} per line.
void write_jsonl(std::ostream& out, const Dataset& ds);
Dataset read_jsonl(std::istream& in);
void save_jsonl(const Dataset& ds, const std::filesystem::path& path);
Dataset load_jsonl(const std::filesystem::path& path);

} // namespace smellcloze::dataset
