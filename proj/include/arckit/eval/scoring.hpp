#pragma once

// pass@k scoring. By default a task counts only when one attempt gets every
// test output right; per-output mode gives fractional credit per test output.

#include "arckit/core/error.hpp"
#include "arckit/core/task.hpp"
#include "arckit/solver/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arckit::eval {

using solver::Prediction;

enum class ScoringMode { AllOutputs, PerOutput };

struct TaskScore {
    std::string task_id;
    std::size_t attempts_used = 0;
    bool solved = false;  // some attempt within k matches every test output
    double credit = 0.0;  // 1/0 in AllOutputs mode; matched fraction in PerOutput
    std::optional<solver::Provenance> provenance;  // empty when the task had no prediction
};

struct BranchTally {
    int tasks = 0;
    double credit = 0.0;
};

struct EvalReport {
    std::size_t k = 2;
    ScoringMode mode = ScoringMode::AllOutputs;
    std::vector<TaskScore> rows;  // task order of the truth set
    double pass_at_k = 0.0;       // mean credit over rows
    std::map<std::string, BranchTally> by_provenance;
    std::map<std::string, BranchTally> by_concept;
    std::map<int, BranchTally> by_difficulty;  // bucket index from 1

    int solved() const {
        int n = 0;
        for (const auto& r : rows) n += r.solved;
        return n;
    }

    json to_json() const {
        json rows_j = json::array();
        for (const auto& r : rows) {
            json j = {{"task_id", r.task_id}, {"attempts_used", r.attempts_used}, {"solved", r.solved}, {"credit", r.credit}};
            j["provenance"] = r.provenance ? json(solver::provenance_name(*r.provenance)) : json(nullptr);
            rows_j.push_back(j);
        }
        auto tallies = [](const auto& m) {
            json j = json::object();
            for (const auto& [key, t] : m) {
                std::string name;
                if constexpr (std::is_same_v<std::decay_t<decltype(key)>, int>) name = std::to_string(key);
                else name = key;
                j[name] = {{"tasks", t.tasks}, {"credit", t.credit}, {"accuracy", t.tasks ? t.credit / t.tasks : 0.0}};
            }
            return j;
        };
        return {{"k", k},
                {"mode", mode == ScoringMode::AllOutputs ? "all" : "per-output"},
                {"tasks", rows.size()},
                {"solved", solved()},
                {"pass_at_k", pass_at_k},
                {"rows", rows_j},
                {"by_provenance", tallies(by_provenance)},
                {"by_concept", tallies(by_concept)},
                {"by_difficulty", tallies(by_difficulty)}};
    }

    /// Rows and headline numbers only; group tallies are not read back.
    static EvalReport from_json(const json& j) {
        try {
            EvalReport r;
            r.k = j.at("k").get<std::size_t>();
            r.mode = j.at("mode").get<std::string>() == "all" ? ScoringMode::AllOutputs : ScoringMode::PerOutput;
            r.pass_at_k = j.at("pass_at_k").get<double>();
            for (const auto& row : j.at("rows")) {
                TaskScore s;
                s.task_id = row.at("task_id").get<std::string>();
                s.attempts_used = row.at("attempts_used").get<std::size_t>();
                s.solved = row.at("solved").get<bool>();
                s.credit = row.at("credit").get<double>();
                if (!row.at("provenance").is_null())
                    s.provenance = solver::provenance_from_name(row.at("provenance").get<std::string>());
                r.rows.push_back(std::move(s));
            }
            return r;
        } catch (const json::exception& e) {
            throw DataError(std::string("malformed eval report: ") + e.what());
        }
    }
};

struct ScoringOptions {
    ScoringMode mode = ScoringMode::AllOutputs;
    std::map<std::string, std::string> concept_of;  // task id → concept group
    std::map<std::string, int> bucket_of;           // task id → difficulty bucket
};

inline TaskScore score_task(const Task& task, const Prediction* p, std::size_t k, ScoringMode mode) {
    if (!task.test_outputs) throw DataError("task '" + task.id + "' has no test outputs to score against");
    const auto& truth = *task.test_outputs;
    TaskScore s;
    s.task_id = task.id;
    if (!p) return s;
    s.provenance = p->provenance;
    s.attempts_used = std::min(k, p->attempts.size());
    std::vector<bool> matched(truth.size(), false);
    for (std::size_t a = 0; a < s.attempts_used; ++a) {
        const auto& att = p->attempts[a];
        if (att == truth) s.solved = true;
        for (std::size_t i = 0; i < truth.size() && i < att.size(); ++i)
            if (att[i] == truth[i]) matched[i] = true;
    }
    if (mode == ScoringMode::AllOutputs) {
        s.credit = s.solved ? 1.0 : 0.0;
    } else {
        int m = 0;
        for (bool b : matched) m += b;
        s.credit = truth.empty() ? 0.0 : static_cast<double>(m) / truth.size();
    }
    return s;
}

/// Scores every task in `truth`; tasks without a prediction score zero.
inline EvalReport score_pass_at_k(const std::vector<Prediction>& predictions, const std::vector<Task>& truth,
                                  std::size_t k, const ScoringOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::map<std::string, const Prediction*> by_id;
    for (const auto& p : predictions) {
        if (!by_id.emplace(p.task_id, &p).second) throw DataError("duplicate prediction for task '" + p.task_id + "'");
    }
    EvalReport r;
    r.k = k;
    r.mode = opt.mode;
    double total = 0;
    for (const auto& t : truth) {
        auto it = by_id.find(t.id);
        auto s = score_task(t, it == by_id.end() ? nullptr : it->second, k, opt.mode);
        total += s.credit;
        const std::string prov = s.provenance ? solver::provenance_name(*s.provenance) : "none";
        r.by_provenance[prov].tasks++;
        r.by_provenance[prov].credit += s.credit;
        if (auto c = opt.concept_of.find(t.id); c != opt.concept_of.end()) {
            r.by_concept[c->second].tasks++;
            r.by_concept[c->second].credit += s.credit;
        }
        if (auto b = opt.bucket_of.find(t.id); b != opt.bucket_of.end()) {
            r.by_difficulty[b->second].tasks++;
            r.by_difficulty[b->second].credit += s.credit;
        }
        r.rows.push_back(std::move(s));
    }
    for (const auto& [id, p] : by_id) {
        bool known = false;
        for (const auto& t : truth) known = known || t.id == id;
        if (!known) throw DataError("prediction for unknown task '" + id + "'");
    }
    r.pass_at_k = truth.empty() ? 0.0 : total / truth.size();
    return r;
}

} // namespace arckit::eval
