#pragma once

#include "arckit/synth/problem_store.hpp"
#include "arckit/synth/prompts.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace arckit::synth {

enum class FinetuneMode { Induction, Transduction };

inline const char* finetune_mode_name(FinetuneMode m) { return m == FinetuneMode::Induction ? "induction" : "transduction"; }

inline FinetuneMode finetune_mode_from_name(std::string_view name) {
    if (name == "induction") return FinetuneMode::Induction;
    if (name == "transduction") return FinetuneMode::Transduction;
    throw std::invalid_argument("unknown fine-tuning mode: " + std::string(name));
}

enum class HoldoutPolicy { EachExample, LastOnly };

inline HoldoutPolicy holdout_policy_from_name(std::string_view name) {
    if (name == "each") return HoldoutPolicy::EachExample;
    if (name == "last") return HoldoutPolicy::LastOnly;
    throw std::invalid_argument("unknown hold-out policy: " + std::string(name));
}

struct FinetuneExample {
    std::string id;
    FinetuneMode mode = FinetuneMode::Transduction;
    std::vector<Message> messages;

    json to_json() const {
        return {{"id", id}, {"mode", finetune_mode_name(mode)}, {"messages", messages_to_json(messages)}};
    }
};

/// One complete conversation: prompt for (train, test input) plus the target answer.
inline std::vector<Message> transduction_record(const std::vector<Pair>& train, const Pair& test) {
    auto m = transduction_messages(train, test.input);
    m.push_back({"assistant", transduction_answer(test.output)});
    return m;
}

inline std::vector<Message> induction_record(const std::vector<Pair>& train, const Grid& test_input,
                                             std::string_view source) {
    auto m = induction_messages(train, test_input);
    m.push_back({"assistant", induction_answer(source)});
    return m;
}

/// Records for every (problem, held-out example) the policy selects, in
/// problem order. Throws DataError for a problem with fewer than 2 examples.
inline std::vector<FinetuneExample> finetune_examples(const std::vector<GeneratedProblem>& problems, FinetuneMode mode,
                                                      HoldoutPolicy policy = HoldoutPolicy::EachExample) {
    std::vector<FinetuneExample> out;
    std::set<std::string> seen;
    for (const auto& p : problems) {
        if (p.examples.size() < 2)
            throw DataError("problem " + p.uid + " has " + std::to_string(p.examples.size()) + " examples; need 2");
        if (!seen.insert(p.uid).second) continue;
        const std::size_t n = p.examples.size();
        const std::size_t first = policy == HoldoutPolicy::LastOnly ? n - 1 : 0;
        for (std::size_t h = first; h < n; ++h) {
            std::vector<Pair> train;
            for (std::size_t i = 0; i < n; ++i)
                if (i != h) train.push_back(p.examples[i]);
            FinetuneExample ex;
            ex.id = p.uid + "/" + std::to_string(h);
            ex.mode = mode;
            ex.messages = mode == FinetuneMode::Transduction ? transduction_record(train, p.examples[h])
                                                             : induction_record(train, p.examples[h].input, p.source_text);
            out.push_back(std::move(ex));
        }
    }
    return out;
}

inline void write_jsonl(std::ostream& os, const std::vector<FinetuneExample>& records) {
    for (const auto& r : records) os << r.to_json().dump() << "\n";
}

} // namespace arckit::synth
