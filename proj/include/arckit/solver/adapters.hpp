#pragma once

// Sampler and predictor backends: chat-completion endpoints (live or
// replayed through ModelClient) and plain functions for tests.

#include "arckit/solver/types.hpp"
#include "arckit/synth/codegen.hpp"
#include "arckit/synth/model_client.hpp"
#include "arckit/synth/prompts.hpp"

#include <functional>

namespace arckit::solver {

class ScriptedSampler : public InductionSampler {
public:
    using Fn = std::function<std::vector<runtime::CandidateProgram>(const Task&, int, const SamplerConfig&)>;
    explicit ScriptedSampler(Fn fn) : fn_(std::move(fn)) {}

    std::vector<runtime::CandidateProgram> sample(const Task& task, int count, const SamplerConfig& cfg) override {
        auto out = fn_(task, count, cfg);
        if (static_cast<int>(out.size()) > count) out.resize(static_cast<std::size_t>(count));
        return out;
    }

private:
    Fn fn_;
};

class ScriptedPredictor : public TransductionPredictor {
public:
    using Fn = std::function<std::vector<BeamCandidate>(const Task&)>;
    explicit ScriptedPredictor(Fn fn) : fn_(std::move(fn)) {}

    std::vector<BeamCandidate> predict(const Task& task) override {
        auto out = fn_(task);
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.score > b.score; });
        return out;
    }

private:
    Fn fn_;
};

/// Draws programs from a chat model prompted with the induction format. The
/// code of each choice runs through `program_command` ("{source}" marks
/// the code file). Choices without a code block are dropped.
class ModelSampler : public InductionSampler {
public:
    ModelSampler(synth::ModelClient& client, std::string program_command, std::string model = "induction",
                 int choices_per_request = 8)
        : client_(client), command_(std::move(program_command)), model_(std::move(model)), batch_(choices_per_request) {}

    std::vector<runtime::CandidateProgram> sample(const Task& task, int count, const SamplerConfig& cfg) override {
        if (task.test_inputs.empty()) throw DataError("task '" + task.id + "' has no test input");
        const auto messages = synth::induction_messages(task.train, task.test_inputs[0]);
        std::vector<runtime::CandidateProgram> out;
        int requested = 0;
        while (requested < count) {
            const int n = std::min(batch_, count - requested);
            json body = {{"model", model_},
                         {"messages", synth::messages_to_json(messages)},
                         {"temperature", cfg.temperature},
                         {"top_p", cfg.top_p},
                         {"n", n},
                         {"seed", requested}};
            requested += n;
            const json res = client_.post("chat/completions", body);
            for (const auto& text : choice_texts(res)) {
                try {
                    out.push_back(runtime::CandidateProgram::external(command_, synth::extract_code_block(text)));
                } catch (const synth::NoCodeBlockError&) {
                    ++dropped_;
                }
            }
        }
        return out;
    }

    int dropped() const { return dropped_; }

    static std::vector<std::string> choice_texts(const json& res) {
        std::vector<std::string> out;
        try {
            for (const auto& c : res.at("choices")) out.push_back(c.at("message").at("content").get<std::string>());
        } catch (const json::exception& e) {
            throw EndpointError(std::string("unexpected chat response shape: ") + e.what());
        }
        return out;
    }

private:
    synth::ModelClient& client_;
    std::string command_;
    std::string model_;
    int batch_;
    int dropped_ = 0;
};

/// Asks a chat model for `beam_width` greedy candidates in the transduction
/// format. A choice's score is the sum of its token log-probabilities when
/// the endpoint returns them, else its "score" field, else minus its rank.
class ModelPredictor : public TransductionPredictor {
public:
    ModelPredictor(synth::ModelClient& client, int beam_width, std::string model = "transduction")
        : client_(client), beam_(beam_width), model_(std::move(model)) {}

    std::vector<BeamCandidate> predict(const Task& task) override {
        if (task.test_inputs.empty()) throw DataError("task '" + task.id + "' has no test input");
        const auto messages = synth::transduction_messages(task.train, task.test_inputs[0]);
        json body = {{"model", model_},
                     {"messages", synth::messages_to_json(messages)},
                     {"temperature", 0.0},
                     {"n", beam_},
                     {"logprobs", true}};
        const json res = client_.post("chat/completions", body);
        std::vector<BeamCandidate> out;
        const auto& choices = res.at("choices");
        for (std::size_t i = 0; i < choices.size(); ++i) {
            const auto& c = choices[i];
            auto grid = parse_answer(c.at("message").at("content").get<std::string>());
            if (!grid) continue;
            out.push_back({std::move(*grid), choice_score(c, i)});
        }
        if (out.empty()) throw DataError("no parseable grid among " + std::to_string(choices.size()) + " candidates");
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.score > b.score; });
        return out;
    }

    /// The grid in the first fenced block, if it decodes.
    static std::optional<Grid> parse_answer(const std::string& text) {
        for (const auto& block : synth::fenced_blocks(text)) {
            try {
                return decode_grid_text(block.body);
            } catch (const DataError&) {
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    static double choice_score(const json& choice, std::size_t rank) {
        if (choice.contains("logprobs") && choice["logprobs"].is_object() && choice["logprobs"].contains("content")) {
            double sum = 0;
            for (const auto& t : choice["logprobs"]["content"]) sum += t.at("logprob").get<double>();
            return sum;
        }
        if (choice.contains("score")) return choice["score"].get<double>();
        return -static_cast<double>(rank);
    }

private:
    synth::ModelClient& client_;
    int beam_;
    std::string model_;
};

} // namespace arckit::solver
