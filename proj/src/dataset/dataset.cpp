#include "smellcloze/dataset.hpp"

#include "smellcloze/errors.hpp"
#include "smellcloze/hash.hpp"
#include "smellcloze/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <tuple>
#include <unordered_set>

namespace smellcloze::dataset {

using json = nlohmann::ordered_json;

namespace {

// Uniform integer in [0, n). std::uniform_int_distribution is
// implementation-defined, which would make splits differ across standard
// libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    while (true) {
        std::uint64_t r = rng();
        if (r >= threshold)
            return r % n;
    }
}

void shuffle(std::vector<std::size_t>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[bounded(rng, i)]);
}

Dataset pick(const Dataset& ds, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    std::vector<Sample> out;
    out.reserve(indices.size());
    for (auto i : indices)
        out.push_back(ds.samples[i]);
    return make_dataset(std::move(out));
}

} // namespace

Dataset make_dataset(std::vector<Sample> samples) {
    Dataset ds;
    std::unordered_set<std::string> ids;
    ids.reserve(samples.size());
    for (const auto& s : samples) {
        if (s.code.empty())
            throw SchemaError("sample '" + s.id + "' has empty code");
        if (!ids.insert(s.id).second)
            throw SchemaError("duplicate sample id '" + s.id + "'");
        ++ds.provenance[project_of(s.id)];
    }
    ds.samples = std::move(samples);
    return ds;
}

std::string sample_id(const ingest::MethodRecord& r) {
    std::uint64_t h = fnv1a64(r.file_path);
    h = fnv1a64(std::string_view("\0", 1), h);
    h = fnv1a64(r.class_name, h);
    h = fnv1a64(std::string_view("\0", 1), h);
    h = fnv1a64(r.signature, h);
    h = fnv1a64(std::string_view("\0", 1), h);
    h = fnv1a64(std::to_string(r.start_line), h);
    return r.project + "/" + to_hex(h);
}

std::string project_of(const std::string& id) {
    auto slash = id.rfind('/');
    return slash == std::string::npos ? std::string() : id.substr(0, slash);
}

BuildResult build_dataset(const std::vector<ingest::MethodRecord>& records, const rules::DetectorConfig& cfg,
                          const BuildOptions& options) {
    if (records.empty())
        throw EmptyInput("cannot build a dataset from zero records");
    rules::validate(cfg);

    BuildResult result;
    std::vector<const ingest::MethodRecord*> kept;
    kept.reserve(records.size());
    std::unordered_set<std::string_view> bodies;
    for (const auto& r : records) {
        if (options.deduplicate && !bodies.insert(r.body_text).second) {
            ++result.duplicates_removed;
            continue;
        }
        kept.push_back(&r);
    }

    std::vector<Sample> samples(kept.size());
    parallel_for(kept.size(), options.jobs, [&](std::size_t i) {
        const auto& r = *kept[i];
        auto m = metrics::compute(r);
        samples[i] = Sample{sample_id(r), r.body_text, rules::combine_labels(rules::detect(m, cfg))};
    });
    result.dataset = make_dataset(std::move(samples));
    return result;
}

Split split(const Dataset& ds, double train_frac, double val_frac, double test_frac, std::uint64_t seed) {
    for (double f : {train_frac, val_frac, test_frac})
        if (!(f >= 0.0 && f <= 1.0))
            throw BadFractions("split fractions must lie in [0, 1]");
    if (std::abs(train_frac + val_frac + test_frac - 1.0) > 1e-9)
        throw BadFractions("split fractions must sum to 1");

    const std::size_t n = ds.size();
    std::size_t n_train = std::min<std::size_t>(n, static_cast<std::size_t>(std::llround(n * train_frac)));
    std::size_t n_val = std::min<std::size_t>(n - n_train, static_cast<std::size_t>(std::llround(n * val_frac)));

    // Interleave the classes: every member gets the key (rank + 0.5) / class
    // size inside its shuffled class, so any prefix of the ordering holds
    // each class in proportion (within one sample).
    std::mt19937_64 rng(seed);
    std::array<std::vector<std::size_t>, CombinedLabel::kCount> by_class;
    for (std::size_t i = 0; i < n; ++i)
        by_class[static_cast<std::size_t>(ds.samples[i].label.value())].push_back(i);

    std::vector<std::tuple<double, int, std::size_t>> order;
    order.reserve(n);
    for (int c = 0; c < CombinedLabel::kCount; ++c) {
        auto& members = by_class[static_cast<std::size_t>(c)];
        shuffle(members, rng);
        for (std::size_t r = 0; r < members.size(); ++r)
            order.emplace_back((static_cast<double>(r) + 0.5) / static_cast<double>(members.size()), c, members[r]);
    }
    std::sort(order.begin(), order.end());

    std::vector<std::size_t> train, val, test;
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::size_t idx = std::get<2>(order[k]);
        (k < n_train ? train : k < n_train + n_val ? val : test).push_back(idx);
    }
    return {pick(ds, std::move(train)), pick(ds, std::move(val)), pick(ds, std::move(test))};
}

std::map<std::size_t, Dataset> subsample(const Dataset& train, const SamplingSpec& spec) {
    for (auto size : spec.sizes)
        if (size > train.size())
            throw SizeExceedsPool("sample size " + std::to_string(size) + " exceeds pool of " +
                                  std::to_string(train.size()));

    std::vector<std::size_t> base(train.size());
    std::iota(base.begin(), base.end(), std::size_t{0});

    std::map<std::size_t, Dataset> out;
    std::vector<std::size_t> nested_order;
    if (spec.mode == SamplingMode::Nested) {
        nested_order = base;
        std::mt19937_64 rng(mix64(spec.seed));
        shuffle(nested_order, rng);
    }
    for (auto size : spec.sizes) {
        if (out.count(size))
            continue;
        std::vector<std::size_t> chosen;
        if (spec.mode == SamplingMode::Nested) {
            chosen.assign(nested_order.begin(), nested_order.begin() + static_cast<std::ptrdiff_t>(size));
        } else {
            // partial Fisher-Yates, seeded per size
            std::vector<std::size_t> pool = base;
            std::mt19937_64 rng(mix64(spec.seed ^ mix64(size)));
            for (std::size_t i = 0; i < size; ++i)
                std::swap(pool[i], pool[i + bounded(rng, pool.size() - i)]);
            chosen.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
        }
        out.emplace(size, pick(train, std::move(chosen)));
    }
    return out;
}

Histogram label_histogram(const Dataset& ds) {
    Histogram h{};
    for (const auto& s : ds.samples)
        ++h[static_cast<std::size_t>(s.label.value())];
    return h;
}

std::string histogram_json(const Histogram& h) {
    json j;
    for (std::size_t c = 0; c < h.size(); ++c)
        j[std::to_string(c)] = h[c];
    return j.dump();
}

void write_jsonl(std::ostream& out, const Dataset& ds) {
    for (const auto& s : ds.samples) {
        json j;
        j["id"] = s.id;
        j["code"] = s.code;
        j["label"] = s.label.value();
        out << j.dump() << '\n';
    }
}

Dataset read_jsonl(std::istream& in) {
    std::vector<Sample> samples;
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
        if (!j.is_object())
            throw SchemaError("sample is not a JSON object", number);
        for (const char* key : {"id", "code", "label"})
            if (!j.contains(key))
                throw SchemaError(std::string("missing field '") + key + "'", number);
        if (!j["id"].is_string() || !j["code"].is_string())
            throw SchemaError("'id' and 'code' must be strings", number);
        if (!j["label"].is_number_integer())
            throw SchemaError("'label' must be an integer", number);
        auto label = j["label"].get<long long>();
        if (label < 0 || label >= CombinedLabel::kCount)
            throw SchemaError("label " + std::to_string(label) + " outside 0..3", number);
        samples.push_back(
            Sample{j["id"].get<std::string>(), j["code"].get<std::string>(), CombinedLabel(static_cast<int>(label))});
    }
    return make_dataset(std::move(samples));
}

void save_jsonl(const Dataset& ds, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + path.string() + "'");
    write_jsonl(out, ds);
    if (!out)
        throw IoError("write failed for '" + path.string() + "'");
}

Dataset load_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path.string() + "'");
    return read_jsonl(in);
}

} // namespace smellcloze::dataset
