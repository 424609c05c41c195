#pragma once

// Shared vocabulary for test-time solving. An attempt is one guess for the
// whole task: one grid per test input.

#include "arckit/core/codec.hpp"
#include "arckit/core/hash.hpp"
#include "arckit/core/task.hpp"
#include "arckit/runtime/program.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arckit::solver {

using Attempt = std::vector<Grid>;

inline Digest attempt_hash(const Attempt& a) { return canonical_hash(std::span<const Grid>(a)); }

struct SamplerConfig {
    double temperature = 0.8;
    double top_p = 1.0;
    int budget = 336;  // B: programs drawn per task
};

/// Proposes candidate programs for a task's train pairs.
class InductionSampler {
public:
    virtual ~InductionSampler() = default;
    /// At most `count` programs.
    virtual std::vector<runtime::CandidateProgram> sample(const Task& task, int count, const SamplerConfig& cfg) = 0;
};

struct BeamCandidate {
    Grid output;
    double score = 0.0;  // log-probability
};

/// Predicts the output for the task's first test input. Candidates come
/// back best first.
class TransductionPredictor {
public:
    virtual ~TransductionPredictor() = default;
    virtual std::vector<BeamCandidate> predict(const Task& task) = 0;
};

enum class Provenance { Induction, Transduction, Ensemble };

inline const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::Induction: return "induction";
    case Provenance::Transduction: return "transduction";
    case Provenance::Ensemble: return "ensemble";
    }
    return "?";
}

inline Provenance provenance_from_name(std::string_view s) {
    if (s == "induction") return Provenance::Induction;
    if (s == "transduction") return Provenance::Transduction;
    if (s == "ensemble") return Provenance::Ensemble;
    throw DataError("unknown provenance: " + std::string(s));
}

struct Diagnostics {
    int programs_sampled = 0;
    int programs_failed_train = 0;  // ran but missed a train pair, or failed to run
    int programs_failed_test = 0;   // fit train but crashed on a test input
    int filtered = 0;               // |F|
    int distinct_outputs = 0;
    std::vector<std::pair<std::string, int>> vote_tally;  // attempt hash hex → supporting programs
    std::vector<std::string> failed_transforms;

    json to_json() const {
        json tally = json::array();
        for (const auto& [h, n] : vote_tally) tally.push_back({h, n});
        return {{"programs_sampled", programs_sampled},
                {"programs_failed_train", programs_failed_train},
                {"programs_failed_test", programs_failed_test},
                {"filtered", filtered},
                {"distinct_outputs", distinct_outputs},
                {"vote_tally", tally},
                {"failed_transforms", failed_transforms}};
    }
};

struct Prediction {
    std::string task_id;
    std::vector<Attempt> attempts;
    Provenance provenance = Provenance::Induction;
    Diagnostics diagnostics;

    json to_json() const {
        json atts = json::array();
        for (const auto& a : attempts) {
            json grids = json::array();
            for (const auto& g : a) grids.push_back(grid_to_json(g));
            atts.push_back(grids);
        }
        return {{"task_id", task_id},
                {"attempts", atts},
                {"provenance", provenance_name(provenance)},
                {"diagnostics", diagnostics.to_json()}};
    }

    static Prediction from_json(const json& j) {
        try {
            Prediction p;
            p.task_id = j.at("task_id").get<std::string>();
            for (const auto& a : j.at("attempts")) {
                Attempt att;
                for (const auto& g : a) att.push_back(grid_from_json(g));
                p.attempts.push_back(std::move(att));
            }
            p.provenance = provenance_from_name(j.at("provenance").get<std::string>());
            return p;
        } catch (const json::exception& e) {
            throw DataError(std::string("malformed prediction: ") + e.what());
        }
    }
};

/// Appends `a` unless an attempt with the same hash is already present.
inline bool push_distinct(std::vector<Attempt>& attempts, Attempt a) {
    const auto h = attempt_hash(a);
    for (const auto& x : attempts)
        if (attempt_hash(x) == h) return false;
    attempts.push_back(std::move(a));
    return true;
}

} // namespace arckit::solver
