#pragma once

// JSONL persistence for generated problems, one problem per line:
// {uid, concepts, description, provenance, code, examples, filter_report}.

#include "arckit/core/codec.hpp"
#include "arckit/core/hash.hpp"
#include "arckit/runtime/executor.hpp"
#include "arckit/synth/descriptions.hpp"
#include "arckit/synth/filter.hpp"

#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace arckit::synth {

struct GeneratedProblem {
    std::string uid;
    ProblemDescription description;
    std::string source_text;
    std::vector<Pair> examples;
    FilterReport filter_report;

    friend bool operator==(const GeneratedProblem&, const GeneratedProblem&) = default;
};

/// Stable id derived from the code, so identical code always collides.
inline std::string problem_uid(std::string_view source_text) { return hash_text(source_text).hex().substr(0, 16); }

inline json examples_to_json(const std::vector<Pair>& pairs) {
    json arr = json::array();
    for (const auto& p : pairs) arr.push_back({{"input", grid_to_json(p.input)}, {"output", grid_to_json(p.output)}});
    return arr;
}

inline std::vector<Pair> examples_from_json(const json& arr) {
    std::vector<Pair> out;
    for (const auto& p : arr) out.push_back({grid_from_json(p.at("input")), grid_from_json(p.at("output"))});
    return out;
}

inline json problem_to_json(const GeneratedProblem& p) {
    return {{"uid", p.uid},
            {"concepts", p.description.concepts},
            {"description", p.description.description},
            {"provenance", p.description.provenance},
            {"code", p.source_text},
            {"examples", examples_to_json(p.examples)},
            {"filter_report", p.filter_report.to_json()}};
}

inline GeneratedProblem problem_from_json(const json& j) {
    try {
        GeneratedProblem p;
        p.uid = j.at("uid").get<std::string>();
        p.description.concepts = j.at("concepts").get<std::vector<std::string>>();
        p.description.description = j.at("description").get<std::string>();
        p.description.provenance = j.value("provenance", std::vector<std::string>{});
        p.source_text = j.at("code").get<std::string>();
        p.examples = examples_from_json(j.at("examples"));
        p.filter_report = FilterReport::from_json(j.at("filter_report"));
        return p;
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed problem record: ") + e.what());
    }
}

inline std::vector<GeneratedProblem> load_problems(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot read " + path.string());
    std::vector<GeneratedProblem> out;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(problem_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        } catch (const DataError& e) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

/// Append-only writer. Problems whose code already appears in the file (or
/// was appended earlier) are skipped.
class ProblemStore {
public:
    explicit ProblemStore(std::filesystem::path path) : path_(std::move(path)) {
        if (std::filesystem::exists(path_))
            for (const auto& p : load_problems(path_)) uids_.insert(p.uid);
        out_.open(path_, std::ios::app);
        if (!out_) throw DataError("cannot write " + path_.string());
    }

    /// False if the problem was a duplicate.
    bool append(const GeneratedProblem& p) {
        std::lock_guard lock(mutex_);
        if (!uids_.insert(p.uid).second) return false;
        out_ << problem_to_json(p).dump() << "\n";
        out_.flush();
        return true;
    }

    std::size_t size() const { return uids_.size(); }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::set<std::string> uids_;
    std::mutex mutex_;
};

/// Re-executes the stored code on the stored inputs; true iff every output
/// is reproduced exactly.
inline bool revalidate(const GeneratedProblem& p, const runtime::CandidateProgram& program,
                       const runtime::ExecLimits& limits = {}) {
    for (const auto& ex : p.examples) {
        auto r = runtime::run_transform(program, ex.input, limits);
        if (!r.ok() || *r.output != ex.output) return false;
    }
    return true;
}

} // namespace arckit::synth
