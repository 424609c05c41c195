#pragma once

// Agreement between runs: Pearson correlation of their 0/1 solve vectors.

#include "arckit/core/error.hpp"
#include "arckit/core/rng.hpp"
#include "arckit/eval/scoring.hpp"

#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace arckit::eval {

struct SolveMatrix {
    std::vector<std::string> runs;
    std::vector<std::string> task_ids;
    std::vector<std::vector<bool>> solved;  // [run][task]

    void validate() const {
        if (solved.size() != runs.size()) throw DataError("solve matrix: row count does not match run names");
        for (std::size_t i = 0; i < solved.size(); ++i)
            if (solved[i].size() != task_ids.size())
                throw DataError("solve matrix: run '" + runs[i] + "' has " + std::to_string(solved[i].size()) +
                                " entries for " + std::to_string(task_ids.size()) + " tasks");
    }
};

/// Rows from score reports, columns in the first report's task order. Every
/// report must cover the same task ids.
inline SolveMatrix solve_matrix(const std::vector<std::pair<std::string, EvalReport>>& reports) {
    SolveMatrix m;
    if (reports.empty()) return m;
    for (const auto& row : reports.front().second.rows) m.task_ids.push_back(row.task_id);
    const std::set<std::string> ids(m.task_ids.begin(), m.task_ids.end());
    for (const auto& [name, report] : reports) {
        std::map<std::string, bool> s;
        for (const auto& row : report.rows) s[row.task_id] = row.solved;
        std::set<std::string> these;
        for (const auto& [id, v] : s) these.insert(id);
        if (these != ids) throw DataError("run '" + name + "' covers a different task set");
        m.runs.push_back(name);
        std::vector<bool> v;
        for (const auto& id : m.task_ids) v.push_back(s[id]);
        m.solved.push_back(std::move(v));
    }
    return m;
}

/// Undefined (nullopt) when either vector is constant.
inline std::optional<double> pearson(const std::vector<bool>& a, const std::vector<bool>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("pearson: length mismatch");
    const double n = static_cast<double>(a.size());
    double sa = 0, sb = 0, sab = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        sab += a[i] && b[i];
    }
    // For 0/1 data, sum of squares equals the sum.
    const double va = n * sa - sa * sa, vb = n * sb - sb * sb;
    if (va <= 0 || vb <= 0) return std::nullopt;
    return (n * sab - sa * sb) / std::sqrt(va * vb);
}

struct CorrelationMatrix {
    std::vector<std::string> runs;
    std::vector<std::vector<std::optional<double>>> r;

    json to_json() const {
        json rows = json::array();
        for (const auto& row : r) {
            json j = json::array();
            for (const auto& v : row) j.push_back(v ? json(*v) : json(nullptr));
            rows.push_back(j);
        }
        return {{"runs", runs}, {"r", rows}};
    }
};

inline CorrelationMatrix solve_correlation(const SolveMatrix& m) {
    m.validate();
    if (m.runs.size() < 2) throw DataError("correlation needs at least two runs");
    CorrelationMatrix c;
    c.runs = m.runs;
    const std::size_t n = m.runs.size();
    c.r.assign(n, std::vector<std::optional<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) c.r[i][j] = c.r[j][i] = pearson(m.solved[i], m.solved[j]);
    return c;
}

struct PermutationTest {
    double observed = 0.0;
    double p_value = 1.0;
    int iterations = 0;
};

/// Two-sided permutation test of r(a, b) against shuffles of b. This treats
/// tasks as exchangeable, which ignores shared task difficulty; read small
/// p-values as "more agreement than chance ordering", nothing stronger.
/// Returns nullopt when r(a, b) is undefined.
inline std::optional<PermutationTest> permutation_test(const std::vector<bool>& a, std::vector<bool> b, int iterations,
                                                       Rng& rng) {
    const auto r0 = pearson(a, b);
    if (!r0) return std::nullopt;
    PermutationTest t{*r0, 1.0, iterations};
    int extreme = 0;
    for (int i = 0; i < iterations; ++i) {
        rng.shuffle(b);
        const auto r = pearson(a, b);
        if (r && std::abs(*r) >= std::abs(*r0) - 1e-12) ++extreme;
    }
    t.p_value = (extreme + 1.0) / (iterations + 1.0);
    return t;
}

} // namespace arckit::eval
