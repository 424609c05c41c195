#pragma once

// End-to-end problem generation: remix descriptions, retrieve similar seeds,
// generate code, execute and filter, persist survivors. Model calls run in
// order on one thread; filtering fans out across workers and results are
// committed in candidate order, so output depends only on the inputs.

#include "arckit/synth/codegen.hpp"
#include "arckit/synth/common_library.hpp"
#include "arckit/synth/descriptions.hpp"
#include "arckit/synth/filter.hpp"
#include "arckit/synth/problem_store.hpp"
#include "arckit/synth/retrieval.hpp"
#include "arckit/util/parallel.hpp"

#include <map>
#include <string>
#include <vector>

namespace arckit::synth {

struct PipelineConfig {
    int num_descriptions = 10;
    std::size_t retrieve_k = 3;
    /// Shell command running generated code; "{source}" names the code file.
    std::string program_command;
    std::uint64_t rng_seed = 0;
    unsigned workers = 1;
    runtime::ExecLimits limits;
    FilterConfig filter;
    DescriptionSampling sampling;
    std::string library_text = std::string(kCommonLibraryText);
};

struct CandidateOutcome {
    ProblemDescription description;
    std::optional<std::string> code;
    std::string codegen_error;
    std::optional<FilterReport> report;
    bool persisted = false;
    bool duplicate = false;
};

struct PipelineReport {
    int description_requests = 0;
    std::vector<std::string> dropped_descriptions;
    std::vector<CandidateOutcome> candidates;
    int persisted = 0;
    int duplicates = 0;
    std::map<std::string, int> failures_by_criterion;

    json to_json() const {
        json cands = json::array();
        for (const auto& c : candidates) {
            json j = {{"concepts", c.description.concepts},
                      {"provenance", c.description.provenance},
                      {"persisted", c.persisted},
                      {"duplicate", c.duplicate}};
            if (c.code) j["uid"] = problem_uid(*c.code);
            if (!c.codegen_error.empty()) j["codegen_error"] = c.codegen_error;
            if (c.report) j["filter_report"] = c.report->to_json();
            cands.push_back(j);
        }
        return {{"description_requests", description_requests},
                {"dropped_descriptions", dropped_descriptions},
                {"candidates", cands},
                {"persisted", persisted},
                {"duplicates", duplicates},
                {"failures_by_criterion", failures_by_criterion}};
    }
};

inline runtime::CandidateProgram generated_program(const std::string& command, const std::string& code) {
    return runtime::CandidateProgram::external(command, code);
}

/// Fresh rng for the i-th candidate, independent of scheduling.
inline Rng candidate_rng(std::uint64_t seed, std::size_t i) {
    return Rng(Rng::splitmix(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1))));
}

inline PipelineReport run_generation(const PipelineConfig& cfg, const std::vector<runtime::SeedProgram>& seeds,
                                     ModelClient& client, ProblemStore& store) {
    if (cfg.program_command.empty()) throw std::invalid_argument("pipeline needs a program command");
    if (seeds.empty()) throw std::invalid_argument("pipeline needs at least one seed");
    PipelineReport report;
    Rng rng(cfg.rng_seed);

    std::vector<ProblemDescription> seed_descs;
    for (const auto& s : seeds) seed_descs.push_back(seed_description(s));
    auto sampled = sample_descriptions(seed_descs, cfg.num_descriptions, client, rng, cfg.sampling);
    report.description_requests = sampled.requests;
    report.dropped_descriptions = sampled.dropped;

    const auto index = build_seed_index(seeds, client);
    for (auto& d : sampled.descriptions) {
        CandidateOutcome c;
        c.description = d;
        try {
            auto retrieved = retrieve_similar_seeds(d, cfg.retrieve_k, index, seeds, client);
            c.code = generate_code(d, retrieved, cfg.library_text, client);
        } catch (const NoCodeBlockError& e) {
            c.codegen_error = e.what();
        }
        report.candidates.push_back(std::move(c));
    }

    std::vector<std::optional<FilterOutcome>> outcomes(report.candidates.size());
    parallel_for(report.candidates.size(), cfg.workers, [&](std::size_t i) {
        const auto& c = report.candidates[i];
        if (!c.code) return;
        Rng r = candidate_rng(cfg.rng_seed, i);
        outcomes[i] = filter_problem(generated_program(cfg.program_command, *c.code), r, cfg.limits, cfg.filter);
    });

    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
        auto& c = report.candidates[i];
        if (!outcomes[i]) continue;
        c.report = outcomes[i]->report;
        for (Criterion k : c.report->failed()) ++report.failures_by_criterion[criterion_name(k)];
        if (!c.report->passed_all()) continue;
        GeneratedProblem p{problem_uid(*c.code), c.description, *c.code, outcomes[i]->examples, *c.report};
        if (store.append(p)) {
            c.persisted = true;
            ++report.persisted;
        } else {
            c.duplicate = true;
            ++report.duplicates;
        }
    }
    return report;
}

/// Re-runs the filter on stored problems; returns one outcome per problem.
inline std::vector<FilterOutcome> refilter(const std::vector<GeneratedProblem>& problems, const std::string& command,
                                           std::uint64_t rng_seed, const runtime::ExecLimits& limits,
                                           const FilterConfig& cfg, unsigned workers = 1) {
    std::vector<FilterOutcome> out(problems.size());
    parallel_for(problems.size(), workers, [&](std::size_t i) {
        Rng r = candidate_rng(rng_seed, i);
        out[i] = filter_problem(generated_program(command, problems[i].source_text), r, limits, cfg);
    });
    return out;
}

} // namespace arckit::synth
