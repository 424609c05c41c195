#pragma once

// Difficulty buckets from an external table of human accuracy per task.

#include "arckit/core/error.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace arckit::eval {

struct DifficultyBuckets {
    std::vector<std::vector<std::string>> buckets;  // bucket 0 is easiest

    /// Task id → 1-based bucket index, for scoring options.
    std::map<std::string, int> index() const {
        std::map<std::string, int> out;
        for (std::size_t b = 0; b < buckets.size(); ++b)
            for (const auto& id : buckets[b]) out[id] = static_cast<int>(b) + 1;
        return out;
    }
};

/// Sorts `task_ids` by human accuracy (highest first, ties by id) and cuts
/// the list into n chunks whose sizes differ by at most one; earlier chunks
/// take the extra tasks.
inline DifficultyBuckets bucket_by_difficulty(const std::map<std::string, double>& accuracy,
                                              std::vector<std::string> task_ids, int n_buckets = 5) {
    if (n_buckets < 1) throw std::invalid_argument("need at least one bucket");
    std::vector<std::string> missing;
    for (const auto& id : task_ids)
        if (!accuracy.count(id)) missing.push_back(id);
    if (!missing.empty()) {
        std::string list;
        for (std::size_t i = 0; i < missing.size() && i < 5; ++i) list += (i ? ", " : "") + missing[i];
        throw DataError(std::to_string(missing.size()) + " task(s) missing human accuracy: " + list);
    }
    std::sort(task_ids.begin(), task_ids.end(), [&](const std::string& a, const std::string& b) {
        const double x = accuracy.at(a), y = accuracy.at(b);
        return x != y ? x > y : a < b;
    });
    task_ids.erase(std::unique(task_ids.begin(), task_ids.end()), task_ids.end());
    DifficultyBuckets out;
    const std::size_t n = task_ids.size(), b = static_cast<std::size_t>(n_buckets);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < b; ++i) {
        const std::size_t size = n / b + (i < n % b ? 1 : 0);
        out.buckets.emplace_back(task_ids.begin() + pos, task_ids.begin() + pos + size);
        pos += size;
    }
    return out;
}

/// CSV with a header row and columns task_id,accuracy. Accuracy is a
/// fraction or a percentage; either way only the ordering matters.
inline std::map<std::string, double> load_human_accuracy(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot read " + path.string());
    std::map<std::string, double> out;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw DataError(path.string() + ":" + std::to_string(lineno) + ": expected two columns");
        const std::string id = line.substr(0, comma), value = line.substr(comma + 1);
        if (lineno == 1 && id == "task_id") continue;
        try {
            std::size_t used = 0;
            const double v = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            out[id] = v;
        } catch (const std::exception&) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": bad accuracy '" + value + "'");
        }
    }
    return out;
}

} // namespace arckit::eval
