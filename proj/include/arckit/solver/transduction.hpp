#pragma once

// Transduction at test time: ask the predictor for beam candidates, either
// once or under several invertible augmentations whose votes are pooled.

#include "arckit/core/augment.hpp"
#include "arckit/solver/types.hpp"

#include <algorithm>
#include <exception>
#include <map>

namespace arckit::solver {

struct RankedCandidate {
    Grid output;
    int freq = 0;  // number of augmentation sets that produced it
    double mean_score = 0.0;
    Digest hash;
};

struct RerankResult {
    std::vector<RankedCandidate> ranked;
    std::vector<std::string> failed_transforms;  // "description: message"
};

/// Identity, transpose and `color_perms` random permutations of all ten colors.
inline std::vector<AugmentationSet> default_rerank_sets(Rng& rng, int color_perms = 3) {
    std::vector<AugmentationSet> sets{{}, {Augmentation::transpose()}};
    for (int i = 0; i < color_perms; ++i) sets.push_back({Augmentation::color_permute(random_perm(rng))});
    return sets;
}

/// Runs the predictor on T(task) for each set T, maps candidates back with
/// T^-1 and ranks the distinct grids by how many sets produced them, then by
/// mean score, then by hash. A grid repeated within one beam counts once,
/// with its best score. A set whose prediction throws is skipped and listed.
inline RerankResult rerank_with_augmentations(const Task& task, TransductionPredictor& predictor,
                                              const std::vector<AugmentationSet>& transforms) {
    struct Acc {
        Grid output;
        std::vector<double> scores;
    };
    std::map<Digest, Acc> acc;
    RerankResult out;
    const Task blind = task.without_truth();
    for (const auto& T : transforms) {
        std::vector<BeamCandidate> beam;
        try {
            beam = predictor.predict(apply_augmentations(T, blind));
        } catch (const std::exception& e) {
            out.failed_transforms.push_back(describe(T) + ": " + e.what());
            continue;
        }
        const auto inverse = invert(T);
        std::map<Digest, std::pair<Grid, double>> best;
        for (auto& c : beam) {
            Grid g = apply_augmentations(inverse, c.output);
            const auto h = canonical_hash(g);
            auto it = best.find(h);
            if (it == best.end()) best.emplace(h, std::make_pair(std::move(g), c.score));
            else it->second.second = std::max(it->second.second, c.score);
        }
        for (auto& [h, gs] : best) {
            auto& a = acc[h];
            if (a.scores.empty()) a.output = std::move(gs.first);
            a.scores.push_back(gs.second);
        }
    }
    for (auto& [h, a] : acc) {
        // Sorted summation keeps the mean independent of transform order.
        std::sort(a.scores.begin(), a.scores.end());
        double sum = 0;
        for (double s : a.scores) sum += s;
        out.ranked.push_back({std::move(a.output), static_cast<int>(a.scores.size()), sum / a.scores.size(), h});
    }
    std::sort(out.ranked.begin(), out.ranked.end(), [](const RankedCandidate& a, const RankedCandidate& b) {
        if (a.freq != b.freq) return a.freq > b.freq;
        if (a.mean_score != b.mean_score) return a.mean_score > b.mean_score;
        return a.hash < b.hash;
    });
    return out;
}

/// Copy of the task keeping only test input i (and its truth, if any).
inline Task single_test(const Task& task, std::size_t i) {
    Task t;
    t.id = task.id;
    t.train = task.train;
    t.test_inputs = {task.test_inputs.at(i)};
    if (task.test_outputs) t.test_outputs = std::vector<Grid>{task.test_outputs->at(i)};
    return t;
}

struct TransductionConfig {
    /// Empty: use the predictor's own beam order.
    std::vector<AugmentationSet> rerank_sets;
};

/// Top-k attempts. Each test input is predicted separately; attempt j pairs
/// up the j-th ranked grid of every test input (the last one when a list
/// runs short).
inline Prediction transduction_solve(const Task& task, TransductionPredictor& predictor, std::size_t k,
                                     const TransductionConfig& cfg = {}) {
    Prediction p;
    p.task_id = task.id;
    p.provenance = Provenance::Transduction;
    std::vector<std::vector<Grid>> per_test;
    for (std::size_t i = 0; i < task.test_inputs.size(); ++i) {
        const Task sub = single_test(task, i).without_truth();
        std::vector<Grid> ranked;
        if (cfg.rerank_sets.empty()) {
            try {
                for (auto& c : predictor.predict(sub)) ranked.push_back(std::move(c.output));
            } catch (const std::exception& e) {
                p.diagnostics.failed_transforms.push_back(std::string("identity: ") + e.what());
            }
        } else {
            auto r = rerank_with_augmentations(sub, predictor, cfg.rerank_sets);
            for (auto& c : r.ranked) ranked.push_back(std::move(c.output));
            for (auto& f : r.failed_transforms) p.diagnostics.failed_transforms.push_back(std::move(f));
        }
        if (ranked.empty()) return p;  // nothing to pair up for this test input
        per_test.push_back(std::move(ranked));
    }
    std::size_t longest = 0;
    for (const auto& r : per_test) longest = std::max(longest, r.size());
    for (std::size_t j = 0; j < longest && p.attempts.size() < k; ++j) {
        Attempt a;
        for (const auto& r : per_test) a.push_back(r[std::min(j, r.size() - 1)]);
        push_distinct(p.attempts, std::move(a));
    }
    return p;
}

} // namespace arckit::solver
