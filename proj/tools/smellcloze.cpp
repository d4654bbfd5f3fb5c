#include "smellcloze/dataset.hpp"
#include "smellcloze/errors.hpp"
#include "smellcloze/eval.hpp"
#include "smellcloze/inference.hpp"
#include "smellcloze/ingest.hpp"
#include "smellcloze/metrics.hpp"
#include "smellcloze/prompt.hpp"
#include "smellcloze/rules.hpp"
#include "smellcloze/run_config.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace smellcloze;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFatal = 1;
constexpr int kExitPartial = 2;

bool g_quiet = false;

void log(const std::string& msg) {
    if (!g_quiet)
        std::cerr << "smellcloze: " << msg << '\n';
}

void write_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + path + "'");
    fn(out);
    if (!out.flush())
        throw IoError("write failed for '" + path + "'");
}

dataset::Dataset load_dataset(const std::string& path) {
    auto ds = dataset::load_jsonl(path);
    log("loaded " + std::to_string(ds.size()) + " samples from " + path);
    return ds;
}

std::string histogram_of(const dataset::Dataset& ds) {
    return dataset::histogram_json(dataset::label_histogram(ds));
}

// Options shared by every command; values override the config file when
// given on the command line.
struct Common {
    std::string config_path;
    unsigned jobs = 0;
    std::uint64_t seed = 0;
    CLI::Option* jobs_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
};

struct ScorerFlags {
    std::string kind, endpoint, template_spec, verbalizer, prompt_config, aggregation, truncate_method;
    int max_seq_length = 512;
    std::size_t batch_size = 1;
    std::string train_config;

    CLI::Option *kind_opt{}, *endpoint_opt{}, *template_opt{}, *verbalizer_opt{}, *prompt_config_opt{},
        *aggregation_opt{}, *truncate_opt{}, *max_len_opt{}, *batch_opt{}, *train_config_opt{};

    void attach(CLI::App* cmd) {
        kind_opt = cmd->add_option("--scorer", kind, "oracle, hash or remote");
        endpoint_opt = cmd->add_option("--endpoint", endpoint,
                                       std::string("remote scorer URL (default: $") + cli::kEndpointEnv + ")");
        template_opt = cmd->add_option("--template", template_spec, "P1, P2, P3 or a template spec");
        verbalizer_opt = cmd->add_option("--verbalizer", verbalizer, "V1, V2 or a verbalizer JSON file");
        prompt_config_opt =
            cmd->add_option("--prompt-config", prompt_config, "JSON file with template and verbalizer")
                ->check(CLI::ExistingFile);
        aggregation_opt = cmd->add_option("--aggregation", aggregation, "class score over label words: max|mean");
        truncate_opt = cmd->add_option("--truncate-method", truncate_method, "head|tail");
        max_len_opt = cmd->add_option("--max-seq-length", max_seq_length, "token budget sent to the scorer");
        batch_opt = cmd->add_option("--batch-size", batch_size, "requests per scorer call");
        train_config_opt = cmd->add_option("--train-config", train_config, "JSON file forwarded to /train")
                               ->check(CLI::ExistingFile);
    }

    void apply(cli::RunConfig& cfg) const {
        if (prompt_config_opt->count()) {
            auto pc = prompt::load_prompt_config(prompt_config);
            cfg.template_spec = pc.tmpl.spec();
            cfg.verbalizer = pc.verbalizer;
        }
        if (kind_opt->count())
            cfg.scorer.kind = inference::parse_scorer_kind(kind);
        if (const char* env = std::getenv(cli::kEndpointEnv); env && *env)
            cfg.scorer.endpoint = env;
        if (endpoint_opt->count())
            cfg.scorer.endpoint = endpoint;
        if (template_opt->count())
            cfg.template_spec = template_spec;
        if (verbalizer_opt->count())
            cfg.verbalizer = cli::resolve_verbalizer(verbalizer);
        if (aggregation_opt->count())
            cfg.scorer.aggregation = inference::parse_aggregation(aggregation);
        if (truncate_opt->count())
            cfg.scorer.truncate_method = inference::parse_truncate_method(truncate_method);
        if (max_len_opt->count()) {
            if (max_seq_length < 1)
                throw ConfigError("--max-seq-length must be positive");
            cfg.scorer.max_seq_length = max_seq_length;
        }
        if (batch_opt->count()) {
            if (batch_size < 1)
                throw ConfigError("--batch-size must be positive");
            cfg.scorer.batch_size = batch_size;
        }
        if (train_config_opt->count()) {
            std::ifstream in(train_config);
            if (!in)
                throw IoError("cannot read '" + train_config + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            cfg.scorer.train_config = buf.str();
        }
    }
};

struct SamplingFlags {
    std::vector<std::size_t> sizes;
    std::string mode;
    CLI::Option *sizes_opt{}, *mode_opt{};

    void attach(CLI::App* cmd) {
        sizes_opt = cmd->add_option("--sizes", sizes, "subset sizes (default 0,64,256,512,1024)")->delimiter(',');
        mode_opt = cmd->add_option("--mode", mode, "independent|nested");
    }

    void apply(cli::RunConfig& cfg) const {
        if (sizes_opt->count())
            cfg.sample_sizes = sizes;
        if (mode_opt->count())
            cfg.sampling_mode = cli::parse_sampling_mode(mode);
    }

    static dataset::SamplingSpec spec(const cli::RunConfig& cfg) {
        return dataset::SamplingSpec{cfg.sample_sizes, cfg.seed, cfg.sampling_mode};
    }
};

cli::RunConfig base_config(const Common& common) {
    cli::RunConfig cfg = common.config_path.empty() ? cli::RunConfig{} : cli::load_run_config(common.config_path);
    if (common.jobs_opt->count())
        cfg.jobs = common.jobs;
    if (common.seed_opt->count())
        cfg.seed = common.seed;
    return cfg;
}

std::unique_ptr<inference::Scorer> open_scorer(const cli::RunConfig& cfg, const dataset::Dataset* gold) {
    auto scorer = cli::make_scorer(cfg, gold);
    if (auto* remote = dynamic_cast<inference::RemoteScorer*>(scorer.get())) {
        auto caps = remote->health();
        log("scorer " + remote->endpoint() + ": model=" + caps.model + " mask=" + caps.mask_token +
            " multiword=" + caps.multiword_mode);
    }
    return scorer;
}

std::string describe(const eval::EvalReport& r) {
    std::ostringstream s;
    s.precision(4);
    s << std::fixed << "n=" << r.n << " accuracy=" << r.accuracy << " precision_w=" << r.precision_w
      << " recall_w=" << r.recall_w << " f1_w=" << r.f1_w;
    return s.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extract Java methods, label code smells and classify them with cloze prompts."};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "smellcloze 1.0.0");

    Common common;
    app.add_option("--config", common.config_path, "JSON run config; command-line flags take precedence")
        ->check(CLI::ExistingFile);
    common.jobs_opt = app.add_option("-j,--jobs", common.jobs, "worker threads (default: all cores)");
    common.seed_opt = app.add_option("--seed", common.seed, "seed for splitting, sampling and the hash scorer");
    app.add_flag("-q,--quiet", g_quiet, "suppress progress messages");

    std::function<int()> run;

    // extract
    std::string root, project, out;
    auto* extract = app.add_subcommand("extract", "scan a project and emit one JSONL method record per method");
    extract->add_option("root", root, "project root directory")->required();
    extract->add_option("--project", project, "project name used in sample ids (default: root directory name)");
    extract->add_option("-o,--out", out, "output file (default: stdout)");
    extract->callback([&] {
        run = [&] {
            auto cfg = base_config(common);
            fs::path root_path(root);
            std::string name = project;
            if (name.empty())
                name = fs::absolute(root_path).lexically_normal().filename().string();
            if (name.empty())
                name = fs::absolute(root_path).lexically_normal().parent_path().filename().string();
            auto result = ingest::scan_project(root_path, name, cfg.jobs);
            write_output(out, [&](std::ostream& o) { ingest::write_records_jsonl(o, result.records); });
            const auto& s = result.summary;
            log("scanned " + std::to_string(s.seen) + " files, parsed " + std::to_string(s.parsed) + ", extracted " +
                std::to_string(result.records.size()) + " methods");
            for (const auto& skipped : s.skipped_files)
                log("skipped " + skipped);
            return s.skipped ? kExitPartial : kExitOk;
        };
    });

    // build
    std::string records_path, thresholds, histogram_out, metrics_out;
    bool no_dedup = false;
    auto* build = app.add_subcommand("build", "compute metrics, apply detection rules and emit a labeled dataset");
    build->add_option("records", records_path, "method records JSONL")->required();
    build->add_option("--thresholds", thresholds, "detector threshold overrides (JSON)")->check(CLI::ExistingFile);
    build->add_flag("--no-dedup", no_dedup, "keep methods with identical bodies");
    build->add_option("-o,--out", out, "dataset JSONL (default: stdout)");
    build->add_option("--histogram", histogram_out, "write the label histogram JSON here");
    build->add_option("--metrics", metrics_out, "write per-method metrics CSV here");
    build->callback([&] {
        run = [&] {
            auto cfg = base_config(common);
            if (!thresholds.empty())
                cfg.detector = rules::load_detector_config(thresholds);
            if (no_dedup)
                cfg.deduplicate = false;
            auto records = ingest::load_records_jsonl(records_path);
            auto built = dataset::build_dataset(records, cfg.detector, {cfg.deduplicate, cfg.jobs});
            write_output(out, [&](std::ostream& o) { dataset::write_jsonl(o, built.dataset); });
            auto hist = histogram_of(built.dataset);
            if (!histogram_out.empty())
                write_output(histogram_out, [&](std::ostream& o) { o << hist << '\n'; });
            if (!metrics_out.empty()) {
                std::vector<metrics::MethodMetrics> m(records.size());
                for (std::size_t i = 0; i < records.size(); ++i)
                    m[i] = metrics::compute(records[i]);
                write_output(metrics_out, [&](std::ostream& o) { metrics::write_csv(o, records, m); });
            }
            log("built " + std::to_string(built.dataset.size()) + " samples (" +
                std::to_string(built.duplicates_removed) + " duplicates removed), histogram " + hist);
            return kExitOk;
        };
    });

    // split
    std::string dataset_path, out_dir;
    std::vector<double> fractions;
    auto* split = app.add_subcommand("split", "stratified train/val/test split");
    split->add_option("dataset", dataset_path, "dataset JSONL")->required();
    split->add_option("--out-dir", out_dir, "directory for train.jsonl, val.jsonl and test.jsonl")->required();
    auto* fractions_opt =
        split->add_option("--fractions", fractions, "train,val,test (default 0.8,0.1,0.1)")->delimiter(',')->expected(3);
    split->callback([&] {
        run = [&] {
            auto cfg = base_config(common);
            if (fractions_opt->count())
                cfg.split = {fractions[0], fractions[1], fractions[2]};
            auto ds = load_dataset(dataset_path);
            auto parts = dataset::split(ds, cfg.split.train, cfg.split.val, cfg.split.test, cfg.seed);
            fs::create_directories(out_dir);
            for (auto [name, part] : {std::pair{"train", &parts.train}, {"val", &parts.val}, {"test", &parts.test}}) {
                dataset::save_jsonl(*part, fs::path(out_dir) / (std::string(name) + ".jsonl"));
                log(std::string(name) + ": " + std::to_string(part->size()) + " samples, histogram " +
                    histogram_of(*part));
            }
            return kExitOk;
        };
    });

    // sample
    SamplingFlags sampling;
    auto* sample = app.add_subcommand("sample", "draw the small-sample training subsets");
    sample->add_option("train", dataset_path, "training split JSONL")->required();
    sample->add_option("--out-dir", out_dir, "directory for sample_<size>.jsonl")->required();
    sampling.attach(sample);
    sample->callback([&] {
        run = [&] {
            auto cfg = base_config(common);
            sampling.apply(cfg);
            auto ds = load_dataset(dataset_path);
            auto subsets = dataset::subsample(ds, SamplingFlags::spec(cfg));
            fs::create_directories(out_dir);
            for (const auto& [size, subset] : subsets) {
                dataset::save_jsonl(subset, fs::path(out_dir) / ("sample_" + std::to_string(size) + ".jsonl"));
                log("sample " + std::to_string(size) + ": histogram " + histogram_of(subset));
            }
            return kExitOk;
        };
    });

    // classify
    ScorerFlags scorer_flags;
    auto* classify = app.add_subcommand("classify", "predict a combined label for every sample");
    classify->add_option("dataset", dataset_path, "dataset JSONL")->required();
    classify->add_option("-o,--out", out, "predictions JSONL (default: stdout)");
    scorer_flags.attach(classify);
    classify->callback([&] {
        run = [&] {
            auto cfg = base_config(common);
            scorer_flags.apply(cfg);
            auto ds = load_dataset(dataset_path);
            auto scorer = open_scorer(cfg, &ds);
            auto tmpl = prompt::resolve_template(cfg.template_spec);
            auto preds =
                inference::classify_batch(*scorer, tmpl, cfg.verbalizer, ds.samples, cli::classify_options(cfg));
            write_output(out, [&](std::ostream& o) { eval::write_predictions_jsonl(o, ds, preds); });
            log("classified " + std::to_string(preds.size()) + " samples");
            return kExitOk;
        };
    });

    // eval
    std::string predictions_path, gold_path;
    auto* evaluate = app.add_subcommand("eval", "score predictions against gold labels");
    evaluate->add_option("predictions", predictions_path, "predictions JSONL")->required()->check(CLI::ExistingFile);
    evaluate->add_option("gold", gold_path, "gold dataset JSONL")->required();
    evaluate->add_option("-o,--out", out, "report JSON (default: stdout)");
    evaluate->callback([&] {
        run = [&] {
            base_config(common);
            auto gold = load_dataset(gold_path);
            std::ifstream in(predictions_path, std::ios::binary);
            if (!in)
                throw IoError("cannot read '" + predictions_path + "'");
            auto report = eval::evaluate_predictions(gold, eval::read_predictions_jsonl(in));
            write_output(out, [&](std::ostream& o) { o << eval::to_json(report) << '\n'; });
            log(describe(report.overall));
            return kExitOk;
        };
    });

    // grid
    ScorerFlags grid_flags;
    auto* grid = app.add_subcommand("grid", "evaluate every built-in template and verbalizer pair");
    grid->add_option("dataset", dataset_path, "dataset JSONL")->required();
    grid->add_option("-o,--out", out, "CSV (default: stdout)");
    grid_flags.attach(grid);
    grid->callback([&] {
        run = [&] {
            auto cfg = base_config(common);
            grid_flags.apply(cfg);
            auto ds = load_dataset(dataset_path);
            auto scorer = open_scorer(cfg, &ds);
            auto cells = eval::run_grid(*scorer, ds, cli::classify_options(cfg));
            write_output(out, [&](std::ostream& o) { eval::write_grid_csv(o, cells); });
            for (const auto& c : cells)
                log(c.name + ": " + describe(c.report));
            return kExitOk;
        };
    });

    // small-sample
    std::string test_path;
    ScorerFlags small_flags;
    SamplingFlags small_sampling;
    auto* small = app.add_subcommand("small-sample", "train on growing subsets and evaluate on a fixed test set");
    small->add_option("train", dataset_path, "training split JSONL")->required();
    small->add_option("test", test_path, "test split JSONL")->required();
    small->add_option("-o,--out", out, "CSV (default: stdout)");
    small_flags.attach(small);
    small_sampling.attach(small);
    small->callback([&] {
        run = [&] {
            auto cfg = base_config(common);
            small_flags.apply(cfg);
            small_sampling.apply(cfg);
            auto train = load_dataset(dataset_path);
            auto test = load_dataset(test_path);
            auto scorer = open_scorer(cfg, &test);
            if (!scorer->supports_training())
                log("scorer cannot train; every size is evaluated zero-shot");
            auto rows = eval::run_small_sample(*scorer, SamplingFlags::spec(cfg), train, test,
                                               prompt::resolve_template(cfg.template_spec), cfg.verbalizer,
                                               cli::classify_options(cfg), cfg.scorer.train_config);
            write_output(out, [&](std::ostream& o) { eval::write_small_sample_csv(o, rows); });
            for (const auto& r : rows)
                log("size " + std::to_string(r.size) + ": " + describe(r.report));
            return kExitOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitFatal;
    }

    try {
        return run();
    } catch (const Error& e) {
        std::cerr << "smellcloze: error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "smellcloze: fatal: " << e.what() << '\n';
    }
    return kExitFatal;
}
