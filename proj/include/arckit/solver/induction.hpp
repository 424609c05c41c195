#pragma once

// Induction at test time: keep the sampled programs that reproduce every
// train pair, then pick test outputs from what the survivors predict.

#include "arckit/runtime/executor.hpp"
#include "arckit/solver/types.hpp"
#include "arckit/util/parallel.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace arckit::solver {

struct FilteredProgram {
    std::size_t index = 0;  // position in the sampled batch
    Attempt test_outputs;
};

struct InductionFilterResult {
    std::vector<FilteredProgram> members;  // F, in sample order
    int failed_train = 0;
    int failed_test = 0;
};

/// F: programs whose run on every train input is ok and equals the train
/// output, and that also run ok on every test input.
inline InductionFilterResult induction_filter(const Task& task, const std::vector<runtime::CandidateProgram>& programs,
                                              const runtime::ExecLimits& limits = {}, unsigned workers = 1) {
    enum class Verdict { Member, FailedTrain, FailedTest };
    std::vector<Verdict> verdicts(programs.size(), Verdict::FailedTrain);
    std::vector<Attempt> outputs(programs.size());
    parallel_for(programs.size(), workers, [&](std::size_t i) {
        for (const auto& pair : task.train) {
            auto r = runtime::run_transform(programs[i], pair.input, limits);
            if (!r.ok() || *r.output != pair.output) return;
        }
        for (const auto& input : task.test_inputs) {
            auto r = runtime::run_transform(programs[i], input, limits);
            if (!r.ok()) {
                verdicts[i] = Verdict::FailedTest;
                return;
            }
            outputs[i].push_back(std::move(*r.output));
        }
        verdicts[i] = Verdict::Member;
    });
    InductionFilterResult out;
    for (std::size_t i = 0; i < programs.size(); ++i) {
        switch (verdicts[i]) {
        case Verdict::Member: out.members.push_back({i, std::move(outputs[i])}); break;
        case Verdict::FailedTrain: ++out.failed_train; break;
        case Verdict::FailedTest: ++out.failed_test; break;
        }
    }
    return out;
}

struct OutputTally {
    Attempt output;
    Digest hash;
    int count = 0;
};

/// Distinct test outputs of F with their supporting program counts, ordered
/// by count descending, then hash ascending.
inline std::vector<OutputTally> tally_outputs(const std::vector<FilteredProgram>& F) {
    std::map<Digest, OutputTally> by_hash;
    for (const auto& m : F) {
        const auto h = attempt_hash(m.test_outputs);
        auto [it, fresh] = by_hash.try_emplace(h, OutputTally{m.test_outputs, h, 0});
        ++it->second.count;
    }
    std::vector<OutputTally> out;
    for (auto& [h, t] : by_hash) out.push_back(std::move(t));
    std::stable_sort(out.begin(), out.end(), [](const OutputTally& a, const OutputTally& b) { return a.count > b.count; });
    return out;
}

namespace detail {

inline void record_tally(Diagnostics& d, const std::vector<OutputTally>& tallies, std::size_t filtered) {
    d.filtered = static_cast<int>(filtered);
    d.distinct_outputs = static_cast<int>(tallies.size());
    d.vote_tally.clear();
    for (const auto& t : tallies) d.vote_tally.emplace_back(t.hash.hex(), t.count);
}

inline void require_nonempty(const std::vector<FilteredProgram>& F, const char* who) {
    if (F.empty()) throw std::invalid_argument(std::string(who) + ": no program fits the train pairs");
}

} // namespace detail

/// Up to k distinct outputs drawn without replacement. Each draw picks a
/// program uniformly among those whose output was not drawn yet, so an
/// output is chosen with probability proportional to its support.
inline Prediction select_uniform(const std::vector<FilteredProgram>& F, std::size_t k, Rng& rng) {
    detail::require_nonempty(F, "select_uniform");
    auto tallies = tally_outputs(F);
    Prediction p;
    p.provenance = Provenance::Induction;
    detail::record_tally(p.diagnostics, tallies, F.size());
    std::vector<bool> taken(tallies.size(), false);
    int remaining = static_cast<int>(F.size());
    while (p.attempts.size() < k && remaining > 0) {
        int ticket = rng.uniform_int(0, remaining - 1);
        for (std::size_t i = 0; i < tallies.size(); ++i) {
            if (taken[i]) continue;
            if (ticket < tallies[i].count) {
                taken[i] = true;
                remaining -= tallies[i].count;
                p.attempts.push_back(tallies[i].output);
                break;
            }
            ticket -= tallies[i].count;
        }
    }
    return p;
}

/// The k best-supported distinct outputs; ties go to the smaller hash.
inline Prediction majority_vote(const std::vector<FilteredProgram>& F, std::size_t k) {
    detail::require_nonempty(F, "majority_vote");
    auto tallies = tally_outputs(F);
    Prediction p;
    p.provenance = Provenance::Induction;
    detail::record_tally(p.diagnostics, tallies, F.size());
    for (std::size_t i = 0; i < tallies.size() && i < k; ++i) p.attempts.push_back(tallies[i].output);
    return p;
}

struct FalsePositiveEntry {
    double rate = 0.0;
    int filtered = 0;
    int wrong = 0;
};

/// Share of F whose test outputs differ from the truth. Empty F has no rate.
inline std::optional<FalsePositiveEntry> false_positive_stats(const std::vector<FilteredProgram>& F, const Attempt& truth) {
    if (F.empty()) return std::nullopt;
    FalsePositiveEntry e;
    e.filtered = static_cast<int>(F.size());
    for (const auto& m : F) e.wrong += m.test_outputs != truth;
    e.rate = static_cast<double>(e.wrong) / e.filtered;
    return e;
}

/// Per-task false-positive rates binned over [0, 1]. Rate 1.0 lands in the
/// last bin.
struct FalsePositiveHistogram {
    static constexpr int kBins = 10;
    std::array<int, kBins> bins{};
    int tasks = 0;
    int tasks_with_false_positives = 0;

    void add(const FalsePositiveEntry& e) {
        ++tasks;
        if (e.wrong > 0) ++tasks_with_false_positives;
        bins[static_cast<std::size_t>(std::min(kBins - 1, static_cast<int>(e.rate * kBins)))]++;
    }

    json to_json() const {
        return {{"bins", bins}, {"tasks", tasks}, {"tasks_with_false_positives", tasks_with_false_positives}};
    }
};

} // namespace arckit::solver
