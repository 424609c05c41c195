#pragma once

#include "arckit/core/error.hpp"
#include "arckit/core/grid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arckit {

struct Pair {
    Grid input;
    Grid output;
    friend bool operator==(const Pair&, const Pair&) = default;
};

/// K demonstration pairs plus test inputs; test outputs are the held-out truth.
struct Task {
    std::string id;
    std::vector<Pair> train;
    std::vector<Grid> test_inputs;
    std::optional<std::vector<Grid>> test_outputs;

    bool has_truth() const { return test_outputs.has_value(); }

    /// Same task without the held-out answers.
    Task without_truth() const {
        Task t = *this;
        t.test_outputs.reset();
        return t;
    }

    friend bool operator==(const Task&, const Task&) = default;
};

/// Throws DataError if any task invariant is violated.
inline void validate_task(const Task& task) {
    auto check = [&](const Grid& g, const char* what) {
        if (!g.is_task_grid())
            throw DataError("task '" + task.id + "': " + what + " grid dimension " +
                            std::to_string(g.width()) + "x" + std::to_string(g.height()) +
                            " outside 1-30");
    };
    if (task.train.empty()) throw DataError("task '" + task.id + "': no train pairs");
    if (task.test_inputs.empty()) throw DataError("task '" + task.id + "': no test inputs");
    for (const auto& p : task.train) {
        check(p.input, "train input");
        check(p.output, "train output");
    }
    for (const auto& g : task.test_inputs) check(g, "test input");
    if (task.test_outputs) {
        if (task.test_outputs->size() != task.test_inputs.size())
            throw DataError("task '" + task.id + "': test outputs do not match test inputs");
        for (const auto& g : *task.test_outputs) check(g, "test output");
    }
}

} // namespace arckit
