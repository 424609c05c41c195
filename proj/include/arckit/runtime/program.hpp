#pragma once

#include "arckit/core/grid.hpp"
#include "arckit/core/rng.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arckit::runtime {

struct ExecLimits {
    int wall_timeout_ms = 2000;
    std::uint64_t memory_bytes = 256ull << 20;
    int max_output_cells = kMaxTaskSide * kMaxTaskSide;
    std::size_t max_stdout_bytes = 1 << 20;
};

enum class Status { Ok, Timeout, Crash, InvalidOutput, Oversize };

inline const char* status_name(Status s) {
    switch (s) {
    case Status::Ok: return "ok";
    case Status::Timeout: return "timeout";
    case Status::Crash: return "crash";
    case Status::InvalidOutput: return "invalid_output";
    case Status::Oversize: return "oversize";
    }
    return "crash";
}

struct ExecutionResult {
    Status status = Status::Crash;
    /// Present iff status is Ok.
    std::optional<Grid> output;
    /// (width, height) of a grid rejected as oversize.
    std::optional<std::pair<int, int>> output_dims;
    std::string stderr_excerpt;
    double duration_ms = 0;

    bool ok() const { return status == Status::Ok; }
    /// The program ran to completion and produced a grid, possibly too large.
    bool executed() const { return status == Status::Ok || status == Status::Oversize; }

    /// Equality of observable behavior (duration and stderr excluded).
    bool same_outcome(const ExecutionResult& o) const {
        return status == o.status && output == o.output && output_dims == o.output_dims;
    }
};

using TransformFn = std::function<Grid(const Grid&)>;
using GeneratorFn = std::function<Grid(Rng&)>;

/// In-process program. Transforms that want randomness must draw it from
/// ambient_rng(), which the executor reseeds per run so nondeterminism is
/// observable.
struct NativeProgram {
    TransformFn transform;
    GeneratorFn generator;
};

namespace detail {
inline Rng& ambient_slot() {
    thread_local Rng rng(0);
    return rng;
}
} // namespace detail

/// Ambient random source for registered programs (stands in for an
/// unseeded global RNG).
inline Rng& ambient_rng() { return detail::ambient_slot(); }

class AmbientSeedScope {
public:
    explicit AmbientSeedScope(std::uint64_t seed) : saved_(detail::ambient_slot()) { detail::ambient_slot() = Rng(seed); }
    ~AmbientSeedScope() { detail::ambient_slot() = saved_; }
    AmbientSeedScope(const AmbientSeedScope&) = delete;
    AmbientSeedScope& operator=(const AmbientSeedScope&) = delete;

private:
    Rng saved_;
};

/// Process-wide table of in-process programs, keyed by name.
class Registry {
public:
    static Registry& instance() {
        static Registry r;
        return r;
    }

    void add(const std::string& key, NativeProgram program) {
        std::lock_guard lock(mutex_);
        programs_[key] = std::make_shared<const NativeProgram>(std::move(program));
    }

    std::shared_ptr<const NativeProgram> find(const std::string& key) const {
        std::lock_guard lock(mutex_);
        auto it = programs_.find(key);
        return it == programs_.end() ? nullptr : it->second;
    }

private:
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const NativeProgram>> programs_;
};

struct CandidateProgram {
    enum class Kind { Registered, External };

    Kind kind = Kind::External;
    std::string source_text;
    /// Registry key, or a shell command. In a command, "{source}" is replaced
    /// by the path of a file holding source_text inside the run's scratch dir.
    std::string entry;
    std::shared_ptr<const NativeProgram> native;

    static CandidateProgram registered(const std::string& key, std::string source = {}) {
        auto p = Registry::instance().find(key);
        if (!p) throw std::invalid_argument("no registered program named " + key);
        return {Kind::Registered, std::move(source), key, std::move(p)};
    }

    static CandidateProgram from_native(std::string key, NativeProgram program, std::string source = {}) {
        return {Kind::Registered, std::move(source), std::move(key),
                std::make_shared<const NativeProgram>(std::move(program))};
    }

    static CandidateProgram external(std::string command, std::string source = {}) {
        return {Kind::External, std::move(source), std::move(command), nullptr};
    }
};

} // namespace arckit::runtime
