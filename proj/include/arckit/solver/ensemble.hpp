#pragma once

// Induction first; transduction only when no sampled program fits the
// train pairs.

#include "arckit/solver/induction.hpp"
#include "arckit/solver/transduction.hpp"

namespace arckit::solver {

enum class Selection { Uniform, MajorityVote };

inline Selection selection_from_name(std::string_view s) {
    if (s == "uniform") return Selection::Uniform;
    if (s == "majority") return Selection::MajorityVote;
    throw std::invalid_argument("unknown selection rule: " + std::string(s));
}

inline const char* selection_name(Selection s) { return s == Selection::Uniform ? "uniform" : "majority"; }

struct InductionConfig {
    SamplerConfig sampler;
    Selection selection = Selection::MajorityVote;
    runtime::ExecLimits limits;
    unsigned workers = 1;
};

struct InductionRun {
    InductionFilterResult filter;
    std::optional<Prediction> prediction;  // empty when F is empty
    int sampled = 0;
};

inline InductionRun induction_run(const Task& task, InductionSampler& sampler, const InductionConfig& cfg,
                                  std::size_t k, Rng& rng) {
    InductionRun run;
    const auto programs = sampler.sample(task, cfg.sampler.budget, cfg.sampler);
    run.sampled = static_cast<int>(programs.size());
    run.filter = induction_filter(task, programs, cfg.limits, cfg.workers);
    if (!run.filter.members.empty()) {
        run.prediction = cfg.selection == Selection::Uniform ? select_uniform(run.filter.members, k, rng)
                                                             : majority_vote(run.filter.members, k);
        run.prediction->task_id = task.id;
    }
    return run;
}

namespace detail {

inline void record_filter(Diagnostics& d, const InductionRun& run) {
    d.programs_sampled = run.sampled;
    d.programs_failed_train = run.filter.failed_train;
    d.programs_failed_test = run.filter.failed_test;
    d.filtered = static_cast<int>(run.filter.members.size());
}

} // namespace detail

/// Induction-only prediction; no attempts when F is empty.
inline Prediction induction_solve(const Task& task, InductionSampler& sampler, const InductionConfig& cfg, std::size_t k,
                                  Rng& rng) {
    auto run = induction_run(task, sampler, cfg, k, rng);
    Prediction p = run.prediction ? *run.prediction : Prediction{task.id, {}, Provenance::Induction, {}};
    detail::record_filter(p.diagnostics, run);
    return p;
}

struct TransductionPath {
    TransductionPredictor* predictor = nullptr;
    TransductionConfig config;
};

struct InductionPath {
    InductionSampler* sampler = nullptr;
    InductionConfig config;
};

/// Provenance is induction when F is non-empty and transduction otherwise.
inline Prediction ensemble_solve(const Task& task, const InductionPath& induction, const TransductionPath& transduction,
                                 std::size_t k, Rng& rng) {
    if (!induction.sampler || !transduction.predictor) throw std::invalid_argument("ensemble needs both paths");
    auto run = induction_run(task, *induction.sampler, induction.config, k, rng);
    Prediction p = run.prediction ? *run.prediction : transduction_solve(task, *transduction.predictor, k, transduction.config);
    p.task_id = task.id;
    detail::record_filter(p.diagnostics, run);
    return p;
}

} // namespace arckit::solver
