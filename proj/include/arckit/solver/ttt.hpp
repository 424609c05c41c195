#pragma once

// Test-time fine-tuning data. Each train pair of an evaluation task takes a
// turn as a fake test example inside a randomly augmented copy of the task.
// Only train pairs are read; test inputs and outputs are never touched.

#include "arckit/core/augment.hpp"
#include "arckit/synth/finetune.hpp"

#include <functional>
#include <ostream>

namespace arckit::solver {

struct TTTExample {
    synth::FinetuneExample example;
    std::string source_task;
    std::size_t fake_index = 0;
    std::string augmentation;

    json to_json() const {
        json j = example.to_json();
        j["source_task"] = source_task;
        j["fake_index"] = fake_index;
        j["augmentation"] = augmentation;
        return j;
    }
};

using Augmenter = std::function<AugmentationSet(Rng&)>;

/// Transpose with probability 1/2, then a color permutation fixing Black.
inline AugmentationSet default_ttt_augmentation(Rng& rng) {
    AugmentationSet set;
    if (rng.bernoulli(0.5)) set.push_back(Augmentation::transpose());
    const Color black[] = {Color::Black};
    set.push_back(Augmentation::color_permute(random_perm(rng, black)));
    return set;
}

struct TTTDataset {
    std::vector<TTTExample> records;
    std::vector<json> mix;  // extra records copied through unchanged
    std::vector<std::string> skipped;  // ids of tasks with fewer than 2 train pairs

    std::size_t size() const { return records.size() + mix.size(); }

    void write_jsonl(std::ostream& os) const {
        for (const auto& r : records) os << r.to_json().dump() << "\n";
        for (const auto& m : mix) os << m.dump() << "\n";
    }
};

/// reps records per (task, train index). Size is reps * sum of train-pair
/// counts over usable tasks, plus mix.size().
inline TTTDataset build_ttt_dataset(const std::vector<Task>& tasks, int reps, Rng& rng,
                                    const Augmenter& augmenter = default_ttt_augmentation, std::vector<json> mix = {}) {
    if (reps < 1) throw std::invalid_argument("build_ttt_dataset: reps must be >= 1");
    TTTDataset out;
    for (const auto& task : tasks) {
        const auto& train = task.train;
        if (train.size() < 2) {
            out.skipped.push_back(task.id);
            continue;
        }
        for (std::size_t k = 0; k < train.size(); ++k) {
            for (int r = 0; r < reps; ++r) {
                const auto aug = augmenter(rng);
                std::vector<Pair> rest;
                for (std::size_t i = 0; i < train.size(); ++i)
                    if (i != k)
                        rest.push_back({apply_augmentations(aug, train[i].input), apply_augmentations(aug, train[i].output)});
                const Pair fake{apply_augmentations(aug, train[k].input), apply_augmentations(aug, train[k].output)};
                TTTExample ex;
                ex.example.id = task.id + "/" + std::to_string(k) + "/" + std::to_string(r);
                ex.example.mode = synth::FinetuneMode::Transduction;
                ex.example.messages = synth::transduction_record(rest, fake);
                ex.source_task = task.id;
                ex.fake_index = k;
                ex.augmentation = describe(aug);
                out.records.push_back(std::move(ex));
            }
        }
    }
    out.mix = std::move(mix);
    return out;
}

} // namespace arckit::solver
