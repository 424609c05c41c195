// arckit: generate synthetic problems, emit fine-tuning data, solve and score
// tasks, and render grids.
//
// Exit codes: 0 ok, 1 usage, 2 data error, 3 endpoint failure.

#include "arckit/core/task_io.hpp"
#include "arckit/eval/correlation.hpp"
#include "arckit/eval/difficulty.hpp"
#include "arckit/eval/render.hpp"
#include "arckit/eval/scoring.hpp"
#include "arckit/solver/adapters.hpp"
#include "arckit/solver/presets.hpp"
#include "arckit/solver/ttt.hpp"
#include "arckit/synth/finetune.hpp"
#include "arckit/synth/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace arckit;
namespace fs = std::filesystem;

namespace {

struct OutputFile {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutputFile(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path, std::ios::binary);
        if (!file) throw DataError("cannot write " + path);
        os = &file;
    }
    std::ostream& operator*() { return *os; }
};

struct ClientFlags {
    std::string mode = "live";
    std::string fixtures;

    void add(CLI::App* cmd) {
        cmd->add_option("--client", mode, "Model endpoint: live, replay or record")
            ->check(CLI::IsMember({"live", "replay", "record"}));
        cmd->add_option("--fixtures", fixtures, "Fixture directory for replay/record");
    }

    synth::ModelClient make(synth::ChatConfig chat = {}, synth::EmbeddingConfig embed = {}) const {
        const auto m = synth::client_mode_from_name(mode);
        if (m != synth::ClientMode::Live && fixtures.empty()) throw std::invalid_argument("--client " + mode + " needs --fixtures");
        return synth::ModelClient::create(m, fixtures, std::move(chat), std::move(embed));
    }
};

runtime::ExecLimits limits_from(int timeout_ms) {
    runtime::ExecLimits l;
    l.wall_timeout_ms = timeout_ms;
    return l;
}

// ---- generate ----

struct GenerateCmd {
    synth::PipelineConfig cfg;
    ClientFlags client;
    std::string out, report, model = "gpt-4o-mini", embedding_model = "text-embedding-ada-002";
    int timeout_ms = 2000;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("generate", "Remix seeds into new problems, filter them and append survivors");
        cmd->add_option("--program-command", cfg.program_command, "Shell command running generated code ({source} = code file)")
            ->required();
        cmd->add_option("--out", out, "Problem store (JSONL, appended)")->required();
        cmd->add_option("--num", cfg.num_descriptions, "Descriptions to sample")->check(CLI::PositiveNumber);
        cmd->add_option("--report", report, "Run report path (default stdout)");
        cmd->add_option("--seed", cfg.rng_seed, "RNG seed");
        cmd->add_option("--workers", cfg.workers, "Filter worker threads");
        cmd->add_option("--retrieve-k", cfg.retrieve_k, "Seeds retrieved per description");
        cmd->add_option("--min-examples", cfg.filter.min_examples, "Examples required per problem");
        cmd->add_option("--timeout-ms", timeout_ms, "Per-execution wall timeout");
        cmd->add_option("--model", model, "Chat model");
        cmd->add_option("--embedding-model", embedding_model, "Embedding model");
        client.add(cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        cfg.limits = limits_from(timeout_ms);
        synth::ChatConfig chat;
        chat.model = model;
        auto c = client.make(chat, {embedding_model});
        synth::ProblemStore store(out);
        const auto r = synth::run_generation(cfg, runtime::bundled_seeds(), c, store);
        OutputFile o(report);
        *o << r.to_json().dump(2) << "\n";
    }
};

// ---- filter ----

struct FilterCmd {
    std::string in, command, out;
    bool seeds = false;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    int timeout_ms = 2000;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("filter", "Re-run the problem filters on stored problems or the bundled seeds");
        auto* in_opt = cmd->add_option("--in", in, "Problem store (JSONL)");
        auto* seeds_opt = cmd->add_flag("--bundled-seeds", seeds, "Filter the bundled seed programs instead");
        in_opt->excludes(seeds_opt);
        cmd->add_option("--program-command", command, "Command running stored code");
        cmd->add_option("--out", out, "Report path, one JSON line per problem (default stdout)");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--workers", workers, "Worker threads");
        cmd->add_option("--timeout-ms", timeout_ms, "Per-execution wall timeout");
        cmd->callback([this] { run(); });
    }

    void run() {
        const auto limits = limits_from(timeout_ms);
        OutputFile o(out);
        if (seeds) {
            const auto& all = runtime::bundled_seeds();
            std::vector<synth::FilterOutcome> outcomes(all.size());
            parallel_for(all.size(), workers, [&](std::size_t i) {
                synth::FilterConfig cfg;
                if (all[i].palette) cfg.fixed_colors = *all[i].palette;
                Rng r = synth::candidate_rng(seed, i);
                outcomes[i] = synth::filter_problem(all[i].candidate(), r, limits, cfg);
            });
            for (std::size_t i = 0; i < all.size(); ++i)
                *o << json{{"id", all[i].id},
                           {"examples", outcomes[i].examples.size()},
                           {"passed", outcomes[i].report.passed_all()},
                           {"filter_report", outcomes[i].report.to_json()}}
                          .dump()
                   << "\n";
            return;
        }
        if (in.empty()) throw std::invalid_argument("filter needs --in or --bundled-seeds");
        if (command.empty()) throw std::invalid_argument("filter --in needs --program-command");
        const auto problems = synth::load_problems(in);
        const auto outcomes = synth::refilter(problems, command, seed, limits, {}, workers);
        for (std::size_t i = 0; i < problems.size(); ++i) {
            const bool same = synth::revalidate(problems[i], synth::generated_program(command, problems[i].source_text), limits);
            *o << json{{"uid", problems[i].uid},
                       {"passed", outcomes[i].report.passed_all()},
                       {"stored_examples_reproduced", same},
                       {"filter_report", outcomes[i].report.to_json()}}
                      .dump()
               << "\n";
        }
    }
};

// ---- emit-finetune ----

struct EmitCmd {
    std::string mode = "transduction", in, tasks, out, holdout = "each";
    std::vector<std::string> mix;
    int reps = 10;
    std::uint64_t seed = 0;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("emit-finetune", "Write fine-tuning conversations as JSONL");
        cmd->add_option("--mode", mode, "induction, transduction or ttt")
            ->check(CLI::IsMember({"induction", "transduction", "ttt"}));
        cmd->add_option("--in", in, "Problem store (induction/transduction)");
        cmd->add_option("--tasks", tasks, "Task file or directory (ttt)");
        cmd->add_option("--holdout", holdout, "Held-out example policy: each or last")->check(CLI::IsMember({"each", "last"}));
        cmd->add_option("--reps", reps, "Augmented copies per fake test example (ttt)")->check(CLI::PositiveNumber);
        cmd->add_option("--mix", mix, "Extra JSONL datasets appended verbatim (ttt)");
        cmd->add_option("--seed", seed, "RNG seed (ttt)");
        cmd->add_option("--out", out, "Output JSONL")->required();
        cmd->callback([this] { run(); });
    }

    void run() {
        json summary;
        if (mode == "ttt") {
            if (tasks.empty()) throw std::invalid_argument("--mode ttt needs --tasks");
            std::vector<json> extra;
            for (const auto& path : mix) {
                std::istringstream lines(read_text_file(path));
                std::string line;
                while (std::getline(lines, line)) {
                    if (line.empty()) continue;
                    try {
                        extra.push_back(json::parse(line));
                    } catch (const json::exception& e) {
                        throw DataError(path + ": " + e.what());
                    }
                }
            }
            Rng rng(seed);
            const auto d = solver::build_ttt_dataset(load_tasks(tasks), reps, rng, solver::default_ttt_augmentation, extra);
            for (const auto& id : d.skipped) std::cerr << "warning: task " << id << " has fewer than 2 train pairs, skipped\n";
            OutputFile o(out);
            d.write_jsonl(*o);
            summary = {{"records", d.records.size()}, {"mix", d.mix.size()}, {"total", d.size()}, {"skipped", d.skipped}};
        } else {
            if (in.empty()) throw std::invalid_argument("--mode " + mode + " needs --in");
            const auto records = synth::finetune_examples(synth::load_problems(in), synth::finetune_mode_from_name(mode),
                                                          synth::holdout_policy_from_name(holdout));
            OutputFile o(out);
            synth::write_jsonl(*o, records);
            summary = {{"records", records.size()}};
        }
        std::cout << summary.dump() << "\n";
    }
};

// ---- solve ----

struct SolveCmd {
    std::string tasks, out, strategy = "ensemble", preset, selection = "majority", command;
    std::string induction_model = "induction", transduction_model = "transduction";
    int budget = 336, beam = 3, rerank_perms = 3, timeout_ms = 2000, batch = 8;
    std::size_t attempts = solver::kArcAttempts;
    bool rerank = false;
    double temperature = solver::kInductionTemperature;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    ClientFlags client;
    CLI::App* cmd = nullptr;

    void add(CLI::App& app) {
        cmd = app.add_subcommand("solve", "Predict test outputs by induction, transduction or both");
        cmd->add_option("--tasks", tasks, "Task file or directory")->required();
        cmd->add_option("--out", out, "Predictions JSONL (default stdout)");
        cmd->add_option("--strategy", strategy, "induction, transduction or ensemble")
            ->check(CLI::IsMember({"induction", "transduction", "ensemble"}));
        cmd->add_option("--preset", preset, "Named configuration; explicit flags override it");
        cmd->add_option("--budget", budget, "Programs sampled per task (e.g. 336, 2048, 10000, 20000)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--attempts", attempts, "Attempts per task (k)")->check(CLI::PositiveNumber);
        cmd->add_option("--beam-width", beam, "Transduction beam width")->check(CLI::PositiveNumber);
        cmd->add_option("--selection", selection, "uniform or majority")->check(CLI::IsMember({"uniform", "majority"}));
        cmd->add_flag("--rerank", rerank, "Pool transduction candidates over augmentations");
        cmd->add_option("--rerank-perms", rerank_perms, "Random color permutations used when reranking");
        cmd->add_option("--temperature", temperature, "Induction sampling temperature");
        cmd->add_option("--batch", batch, "Programs requested per chat call")->check(CLI::PositiveNumber);
        cmd->add_option("--program-command", command, "Command running sampled code ({source} = code file)");
        cmd->add_option("--induction-model", induction_model, "Induction model name");
        cmd->add_option("--transduction-model", transduction_model, "Transduction model name");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--workers", workers, "Program execution threads");
        cmd->add_option("--timeout-ms", timeout_ms, "Per-execution wall timeout");
        client.add(cmd);
        cmd->callback([this] { run(); });
    }

    bool given(const char* flag) const { return cmd->count(flag) > 0; }

    void apply_preset() {
        if (preset.empty()) return;
        const auto& p = solver::find_preset(preset);
        if (!given("--strategy")) strategy = solver::strategy_name(p.strategy);
        if (!given("--budget") && p.budget) budget = p.budget;
        if (!given("--beam-width") && p.beam_width) beam = p.beam_width;
        if (!given("--attempts")) attempts = p.attempts;
        if (!given("--selection")) selection = solver::selection_name(p.selection);
        if (!given("--rerank")) rerank = p.rerank;
        if (!given("--temperature")) temperature = p.temperature;
        if (p.ttt) std::cerr << "note: preset " << p.name << " assumes a test-time-trained transduction model\n";
    }

    void run() {
        apply_preset();
        const auto strat = solver::strategy_from_name(strategy);
        const bool needs_induction = strat != solver::Strategy::Transduction;
        if (needs_induction && command.empty()) throw std::invalid_argument("--strategy " + strategy + " needs --program-command");
        const auto all = load_tasks(tasks);
        auto model = client.make();
        solver::ModelSampler sampler(model, command, induction_model, batch);
        solver::ModelPredictor predictor(model, beam, transduction_model);

        solver::InductionConfig icfg;
        icfg.sampler = {temperature, 1.0, budget};
        icfg.selection = solver::selection_from_name(selection);
        icfg.limits = limits_from(timeout_ms);
        icfg.workers = workers;

        OutputFile o(out);
        std::map<std::string, int> by_provenance;
        for (std::size_t i = 0; i < all.size(); ++i) {
            const Task blind = all[i].without_truth();
            Rng rng = synth::candidate_rng(seed, i);
            solver::TransductionConfig tcfg;
            if (rerank) tcfg.rerank_sets = solver::default_rerank_sets(rng, rerank_perms);
            solver::Prediction p;
            switch (strat) {
            case solver::Strategy::Induction: p = solver::induction_solve(blind, sampler, icfg, attempts, rng); break;
            case solver::Strategy::Transduction: p = solver::transduction_solve(blind, predictor, attempts, tcfg); break;
            case solver::Strategy::Ensemble:
                p = solver::ensemble_solve(blind, {&sampler, icfg}, {&predictor, tcfg}, attempts, rng);
                break;
            }
            p.task_id = blind.id;
            ++by_provenance[solver::provenance_name(p.provenance)];
            *o << p.to_json().dump() << "\n";
        }
        std::cerr << json{{"tasks", all.size()}, {"by_provenance", by_provenance}}.dump() << "\n";
    }
};

// ---- eval ----

struct EvalCmd {
    std::string predictions, truth, out, human, concepts;
    std::size_t k = solver::kArcAttempts;
    int buckets = 5;
    bool per_output = false;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("eval", "Score predictions with pass@k");
        cmd->add_option("--predictions", predictions, "Predictions JSONL")->required();
        cmd->add_option("--truth", truth, "Task file or directory with test outputs")->required();
        cmd->add_option("--k", k, "Attempts that count")->check(CLI::PositiveNumber);
        cmd->add_flag("--per-output", per_output, "Credit each test output separately");
        cmd->add_option("--human", human, "CSV task_id,accuracy for difficulty buckets");
        cmd->add_option("--buckets", buckets, "Number of difficulty buckets")->check(CLI::PositiveNumber);
        cmd->add_option("--concepts", concepts, "CSV task_id,group for per-group accuracy");
        cmd->add_option("--out", out, "Report path (default stdout)");
        cmd->callback([this] { run(); });
    }

    void run() {
        std::vector<solver::Prediction> preds;
        std::istringstream lines(read_text_file(predictions));
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty()) continue;
            try {
                preds.push_back(solver::Prediction::from_json(json::parse(line)));
            } catch (const json::exception& e) {
                throw DataError(predictions + ": " + e.what());
            }
        }
        const auto tasks = load_tasks(truth);
        eval::ScoringOptions opt;
        opt.mode = per_output ? eval::ScoringMode::PerOutput : eval::ScoringMode::AllOutputs;
        if (!human.empty()) {
            std::vector<std::string> ids;
            for (const auto& t : tasks) ids.push_back(t.id);
            opt.bucket_of = eval::bucket_by_difficulty(eval::load_human_accuracy(human), ids, buckets).index();
        }
        if (!concepts.empty()) {
            std::istringstream rows(read_text_file(concepts));
            while (std::getline(rows, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                const auto comma = line.find(',');
                if (line.empty() || comma == std::string::npos || line.rfind("task_id,", 0) == 0) continue;
                opt.concept_of[line.substr(0, comma)] = line.substr(comma + 1);
            }
        }
        const auto report = eval::score_pass_at_k(preds, tasks, k, opt);
        OutputFile o(out);
        *o << report.to_json().dump(2) << "\n";
    }
};

// ---- corr ----

struct CorrCmd {
    std::vector<std::string> reports;
    int permutations = 0;
    std::uint64_t seed = 0;
    std::string out;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("corr", "Correlate solved-task vectors across eval reports");
        cmd->add_option("--report", reports, "NAME=PATH of an eval report; give at least two")->required();
        cmd->add_option("--permutations", permutations, "Permutation-test shuffles per pair (0 = off)");
        cmd->add_option("--seed", seed, "RNG seed for the permutation test");
        cmd->add_option("--out", out, "Output path (default stdout)");
        cmd->callback([this] { run(); });
    }

    void run() {
        std::vector<std::pair<std::string, eval::EvalReport>> loaded;
        for (const auto& spec : reports) {
            const auto eq = spec.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("--report expects NAME=PATH, got " + spec);
            json j;
            try {
                j = json::parse(read_text_file(spec.substr(eq + 1)));
            } catch (const json::exception& e) {
                throw DataError(spec.substr(eq + 1) + ": " + e.what());
            }
            loaded.emplace_back(spec.substr(0, eq), eval::EvalReport::from_json(j));
        }
        const auto m = eval::solve_matrix(loaded);
        json result = eval::solve_correlation(m).to_json();
        if (permutations > 0) {
            Rng rng(seed);
            json tests = json::array();
            for (std::size_t i = 0; i < m.runs.size(); ++i)
                for (std::size_t j = i + 1; j < m.runs.size(); ++j) {
                    auto t = eval::permutation_test(m.solved[i], m.solved[j], permutations, rng);
                    tests.push_back({{"a", m.runs[i]},
                                     {"b", m.runs[j]},
                                     {"p_value", t ? json(t->p_value) : json(nullptr)},
                                     {"iterations", permutations}});
                }
            result["permutation_tests"] = tests;
        }
        OutputFile o(out);
        *o << result.dump(2) << "\n";
    }
};

// ---- render ----

struct RenderCmd {
    std::string task, grid, format = "svg", out;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("render", "Draw a task or a grid as SVG or ANSI");
        auto* t = cmd->add_option("--task", task, "Task JSON file");
        auto* g = cmd->add_option("--grid", grid, "Grid as a JSON array of rows");
        t->excludes(g);
        cmd->add_option("--format", format, "svg or ansi")->check(CLI::IsMember({"svg", "ansi"}));
        cmd->add_option("--out", out, "Output file (default stdout)");
        cmd->callback([this] { run(); });
    }

    void run() {
        std::string text;
        if (!task.empty()) {
            const auto t = load_task_file(task);
            text = format == "svg" ? eval::render_svg(t) : eval::render_ansi(t);
        } else if (!grid.empty()) {
            json j;
            try {
                j = json::parse(grid);
            } catch (const json::exception& e) {
                throw DataError(std::string("--grid is not JSON: ") + e.what());
            }
            const auto g = grid_from_json(j);
            text = format == "svg" ? eval::render_svg(g) : eval::render_ansi(g);
        } else {
            throw std::invalid_argument("render needs --task or --grid");
        }
        if (out.empty()) std::cout << text;
        else eval::write_text_file(out, text);
    }
};

struct PresetsCmd {
    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("presets", "List solver presets and their reference accuracies");
        cmd->callback([] {
            json arr = json::array();
            for (const auto& p : solver::solver_presets()) arr.push_back(p.to_json());
            std::cout << arr.dump(2) << "\n";
        });
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthetic ARC problem generation, solving and scoring"};
    app.require_subcommand(1);
    GenerateCmd generate;
    FilterCmd filter;
    EmitCmd emit;
    SolveCmd solve;
    EvalCmd evaluate;
    CorrCmd corr;
    RenderCmd render;
    PresetsCmd presets;
    generate.add(app);
    filter.add(app);
    emit.add(app);
    solve.add(app);
    evaluate.add(app);
    corr.add(app);
    render.add(app);
    presets.add(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const EndpointError& e) {
        std::cerr << "endpoint error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
