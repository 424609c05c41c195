#pragma once

// Quality filter for generated problems: a program is kept only if it runs,
// is deterministic, stays within task grid sizes, does not depend on color
// arithmetic, and is not the identity on every example.

#include "arckit/core/codec.hpp"
#include "arckit/runtime/executor.hpp"

#include <array>
#include <string>
#include <vector>

namespace arckit::synth {

enum class Criterion { Executes, Deterministic, GridSize, ColorPermutation, NonIdentity };

inline constexpr std::array<Criterion, 5> kAllCriteria = {Criterion::Executes, Criterion::Deterministic,
                                                          Criterion::GridSize, Criterion::ColorPermutation,
                                                          Criterion::NonIdentity};

inline const char* criterion_name(Criterion c) {
    switch (c) {
    case Criterion::Executes: return "executes";
    case Criterion::Deterministic: return "deterministic";
    case Criterion::GridSize: return "grid_size";
    case Criterion::ColorPermutation: return "color_permutation";
    case Criterion::NonIdentity: return "non_identity";
    }
    return "?";
}

struct CriterionResult {
    bool passed = false;
    std::string reason;
    friend bool operator==(const CriterionResult&, const CriterionResult&) = default;
};

struct FilterReport {
    std::array<CriterionResult, 5> results;

    CriterionResult& operator[](Criterion c) { return results[static_cast<std::size_t>(c)]; }
    const CriterionResult& operator[](Criterion c) const { return results[static_cast<std::size_t>(c)]; }

    bool passed_all() const {
        return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    }

    std::vector<Criterion> failed() const {
        std::vector<Criterion> out;
        for (Criterion c : kAllCriteria)
            if (!(*this)[c].passed) out.push_back(c);
        return out;
    }

    json to_json() const {
        json j = json::object();
        for (Criterion c : kAllCriteria) j[criterion_name(c)] = {{"passed", (*this)[c].passed}, {"reason", (*this)[c].reason}};
        return j;
    }

    static FilterReport from_json(const json& j) {
        FilterReport r;
        for (Criterion c : kAllCriteria) {
            const auto& e = j.at(criterion_name(c));
            r[c] = {e.at("passed").get<bool>(), e.value("reason", "")};
        }
        return r;
    }

    friend bool operator==(const FilterReport&, const FilterReport&) = default;
};

struct FilterConfig {
    int min_examples = 4;
    /// Generator calls allowed in total while collecting examples.
    int max_generator_calls = 12;
    int determinism_repeats = 3;
    int color_permutations = 3;
    /// Colors the program may treat specially (a seed's declared palette).
    std::vector<Color> fixed_colors;
    unsigned workers = 1;
};

struct FilterOutcome {
    FilterReport report;
    /// Examples whose transform returned a valid grid.
    std::vector<Pair> examples;
};

/// Runs the generator to collect examples, then evaluates every criterion.
/// Criteria that need examples fail with a "not evaluated" reason when none
/// could be produced. Pure in (program behavior, limits, rng state).
inline FilterOutcome filter_problem(const runtime::CandidateProgram& program, Rng& rng,
                                    const runtime::ExecLimits& limits = {}, const FilterConfig& cfg = {}) {
    using runtime::Status;
    FilterOutcome out;
    auto& report = out.report;

    std::vector<Grid> inputs;  // inputs whose transform ran to completion
    std::vector<runtime::ExecutionResult> results;
    std::vector<std::string> failures;
    std::vector<std::string> size_violations;
    int calls = 0;
    while (static_cast<int>(inputs.size()) < cfg.min_examples && calls < cfg.max_generator_calls) {
        Rng sub = rng.split();
        ++calls;
        auto gen = runtime::run_generate(program, sub.next_u64(), limits);
        if (gen.status == Status::Oversize) {
            size_violations.push_back("input " + std::to_string(gen.output_dims->first) + "x" +
                                      std::to_string(gen.output_dims->second));
            continue;
        }
        if (!gen.ok()) {
            failures.push_back(std::string("generator ") + runtime::status_name(gen.status));
            continue;
        }
        auto t = runtime::run_transform(program, *gen.output, limits);
        if (!t.executed()) {
            failures.push_back(std::string("transform ") + runtime::status_name(t.status));
            continue;
        }
        if (t.status == Status::Oversize)
            size_violations.push_back("output " + std::to_string(t.output_dims->first) + "x" +
                                      std::to_string(t.output_dims->second));
        inputs.push_back(std::move(*gen.output));
        results.push_back(std::move(t));
    }

    auto summary = [](const std::vector<std::string>& items) {
        std::string s;
        for (std::size_t i = 0; i < items.size() && i < 3; ++i) s += (i ? "; " : "") + items[i];
        if (items.size() > 3) s += "; ...";
        return s;
    };

    const int produced = static_cast<int>(inputs.size());
    report[Criterion::Executes] = {produced >= cfg.min_examples,
                                   std::to_string(produced) + " of " + std::to_string(cfg.min_examples) +
                                       " examples after " + std::to_string(calls) + " generator calls" +
                                       (failures.empty() ? "" : " (" + summary(failures) + ")")};

    report[Criterion::GridSize] = {size_violations.empty(),
                                   size_violations.empty() ? "" : "larger than 30: " + summary(size_violations)};

    if (inputs.empty()) {
        const CriterionResult skipped{false, "not evaluated: no examples"};
        report[Criterion::Deterministic] = skipped;
        report[Criterion::ColorPermutation] = skipped;
        report[Criterion::NonIdentity] = skipped;
        return out;
    }

    const bool deterministic =
        runtime::check_determinism(program, inputs, cfg.determinism_repeats, limits, cfg.workers);
    report[Criterion::Deterministic] = {deterministic, deterministic ? "" : "outputs differ across ambient seeds"};

    Rng perm_rng = rng.split();
    auto color = runtime::check_color_symmetry(program, inputs, cfg.color_permutations, perm_rng, cfg.fixed_colors,
                                               limits, cfg.workers);
    report[Criterion::ColorPermutation] = {color.passed, color.reason};

    // An oversize output differs from its input, so every executed example counts.
    bool all_identity = true;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (!results[i].ok()) {
            all_identity = false;
            continue;
        }
        if (*results[i].output != inputs[i]) all_identity = false;
        out.examples.push_back({inputs[i], *results[i].output});
    }
    report[Criterion::NonIdentity] = {!all_identity, all_identity ? "every example maps input to itself" : ""};
    return out;
}

} // namespace arckit::synth
