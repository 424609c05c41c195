#pragma once

#include "arckit/core/augment.hpp"
#include "arckit/core/codec.hpp"
#include "arckit/runtime/program.hpp"
#include "arckit/runtime/subprocess.hpp"
#include "arckit/util/parallel.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace arckit::runtime {

/// Environment variable carrying the ambient seed to external programs.
inline constexpr const char* kAmbientSeedEnv = "ARC_AMBIENT_SEED";

namespace detail {

inline std::string excerpt(std::string_view text, std::size_t max = 400) {
    std::string s(text.substr(0, max));
    if (text.size() > max) s += "...";
    return s;
}

// Applies the size rules to a produced grid.
inline ExecutionResult classify_grid(Grid g, const ExecLimits& limits) {
    ExecutionResult r;
    if (g.width() > kMaxTaskSide || g.height() > kMaxTaskSide || g.area() > limits.max_output_cells) {
        r.status = Status::Oversize;
        r.output_dims = std::pair{g.width(), g.height()};
        return r;
    }
    r.status = Status::Ok;
    r.output = std::move(g);
    return r;
}

inline std::string request_line(const json& request) { return request.dump() + "\n"; }

// Interprets a protocol reply. Exactly one LF-terminated JSON line is allowed.
inline ExecutionResult parse_reply(const ProcessOutcome& p, const ExecLimits& limits) {
    ExecutionResult r;
    r.stderr_excerpt = excerpt(p.stderr_data);
    if (!p.launched) {
        r.status = Status::Crash;
        r.stderr_excerpt = p.launch_error;
        return r;
    }
    if (p.timed_out) {
        r.status = Status::Timeout;
        return r;
    }
    if (p.stdout_overflow) {
        r.status = Status::InvalidOutput;
        r.stderr_excerpt = "stdout exceeded cap";
        return r;
    }
    if (p.signal || !p.exit_code || *p.exit_code != 0) {
        r.status = Status::Crash;
        if (p.signal) r.stderr_excerpt = "killed by signal " + std::to_string(*p.signal) + "; " + r.stderr_excerpt;
        return r;
    }
    const std::string& s = p.stdout_data;
    const auto nl = s.find('\n');
    if (nl == std::string::npos || nl + 1 != s.size()) {
        r.status = Status::InvalidOutput;
        r.stderr_excerpt = "expected exactly one LF-terminated reply line; " + r.stderr_excerpt;
        return r;
    }
    json reply;
    try {
        reply = json::parse(s.substr(0, nl));
    } catch (const json::exception&) {
        r.status = Status::InvalidOutput;
        r.stderr_excerpt = "reply is not JSON: " + excerpt(s, 120);
        return r;
    }
    if (!reply.is_object()) {
        r.status = Status::InvalidOutput;
        return r;
    }
    if (reply.size() != 1 || !(reply.contains("output") || reply.contains("error"))) {
        r.status = Status::InvalidOutput;
        r.stderr_excerpt = "reply must hold exactly one of output/error";
        return r;
    }
    if (reply.contains("error")) {
        r.status = Status::Crash;
        r.stderr_excerpt = excerpt(reply["error"].is_string() ? reply["error"].get<std::string>() : reply["error"].dump());
        return r;
    }
    try {
        auto out = classify_grid(grid_from_json(reply["output"], kMaxWorkingSide), limits);
        out.stderr_excerpt = r.stderr_excerpt;
        return out;
    } catch (const std::exception& e) {
        r.status = Status::InvalidOutput;
        r.stderr_excerpt = std::string("malformed output grid: ") + e.what();
        return r;
    }
}

inline ProcessSpec external_spec(const CandidateProgram& program, const json& request, const ExecLimits& limits,
                                 std::uint64_t ambient_seed) {
    ProcessSpec spec;
    spec.command = program.entry;
    const std::string token = "{source}";
    if (auto pos = spec.command.find(token); pos != std::string::npos) {
        spec.command.replace(pos, token.size(), "program.src");
        spec.files.push_back({"program.src", program.source_text});
    }
    spec.stdin_data = request_line(request);
    spec.wall_timeout_ms = limits.wall_timeout_ms;
    spec.memory_bytes = limits.memory_bytes;
    spec.max_stdout_bytes = limits.max_stdout_bytes;
    spec.extra_env.push_back({kAmbientSeedEnv, std::to_string(ambient_seed)});
    return spec;
}

template <typename Body>
ExecutionResult run_native(Body&& body, const ExecLimits& limits, std::uint64_t ambient_seed) {
    const auto start = std::chrono::steady_clock::now();
    ExecutionResult r;
    try {
        AmbientSeedScope scope(ambient_seed);
        r = classify_grid(body(), limits);
    } catch (const std::exception& e) {
        r = {};
        r.status = Status::Crash;
        r.stderr_excerpt = excerpt(e.what());
    } catch (...) {
        r = {};
        r.status = Status::Crash;
        r.stderr_excerpt = "unknown exception";
    }
    r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace detail

/// Runs the program's transform on one input. Registered programs run in
/// process (no wall timeout is enforced for them); external programs run in
/// a fresh sandboxed process speaking the line protocol.
inline ExecutionResult run_transform(const CandidateProgram& program, const Grid& input, const ExecLimits& limits = {},
                                     std::uint64_t ambient_seed = 0) {
    if (program.kind == CandidateProgram::Kind::Registered) {
        if (!program.native || !program.native->transform) {
            ExecutionResult r;
            r.stderr_excerpt = "program has no transform";
            return r;
        }
        return detail::run_native([&] { return program.native->transform(input); }, limits, ambient_seed);
    }
    json request = {{"op", "transform"}, {"input", grid_to_json(input)}};
    auto outcome = run_process(detail::external_spec(program, request, limits, ambient_seed));
    auto r = detail::parse_reply(outcome, limits);
    r.duration_ms = outcome.duration_ms;
    return r;
}

/// Asks the program's generator for one input grid drawn from `seed`.
inline ExecutionResult run_generate(const CandidateProgram& program, std::uint64_t seed, const ExecLimits& limits = {},
                                    std::uint64_t ambient_seed = 0) {
    if (program.kind == CandidateProgram::Kind::Registered) {
        if (!program.native || !program.native->generator) {
            ExecutionResult r;
            r.stderr_excerpt = "program has no generator";
            return r;
        }
        return detail::run_native(
            [&] {
                Rng rng(seed);
                return program.native->generator(rng);
            },
            limits, ambient_seed);
    }
    json request = {{"op", "generate"}, {"seed", seed}};
    auto outcome = run_process(detail::external_spec(program, request, limits, ambient_seed));
    auto r = detail::parse_reply(outcome, limits);
    r.duration_ms = outcome.duration_ms;
    return r;
}

/// Runs a batch of independent executions on `workers` threads; results are
/// index-aligned with the inputs.
inline std::vector<ExecutionResult> run_transforms(const CandidateProgram& program, const std::vector<Grid>& inputs,
                                                   const ExecLimits& limits = {}, std::uint64_t ambient_seed = 0,
                                                   unsigned workers = 1) {
    std::vector<ExecutionResult> out(inputs.size());
    parallel_for(inputs.size(), workers, [&](std::size_t i) { out[i] = run_transform(program, inputs[i], limits, ambient_seed); });
    return out;
}

class ExecutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// n (input, output) pairs. Each example draws its generator seed from a
/// fresh substream of `rng`; a failing generator is retried up to
/// `max_retries` times per example. Throws ExecutionError on persistent
/// generator failure or any transform failure.
inline std::vector<Pair> generate_examples(const CandidateProgram& program, int n, Rng& rng, const ExecLimits& limits = {},
                                           int max_retries = 20) {
    if (n < 1) throw std::invalid_argument("generate_examples: n must be >= 1");
    std::vector<Pair> out;
    for (int i = 0; i < n; ++i) {
        Rng sub = rng.split();
        std::optional<Grid> input;
        std::string last_error;
        for (int attempt = 0; attempt <= max_retries && !input; ++attempt) {
            auto g = run_generate(program, sub.next_u64(), limits);
            if (g.ok()) input = std::move(g.output);
            else last_error = std::string(status_name(g.status)) + ": " + g.stderr_excerpt;
        }
        if (!input) throw ExecutionError("generator failed after retries: " + last_error);
        auto t = run_transform(program, *input, limits);
        if (!t.ok())
            throw ExecutionError("transform failed on generated input: " + std::string(status_name(t.status)) + ": " +
                                 t.stderr_excerpt);
        out.push_back({std::move(*input), std::move(*t.output)});
    }
    return out;
}

/// Ambient seed used for the r-th repeat of a determinism check.
inline std::uint64_t repeat_ambient_seed(int r) { return Rng::splitmix(0xa5a5a5a5ULL + static_cast<std::uint64_t>(r)); }

/// True iff every input yields the same status and output in every repeat,
/// each repeat running under a different ambient seed.
inline bool check_determinism(const CandidateProgram& program, const std::vector<Grid>& inputs, int repeats = 3,
                              const ExecLimits& limits = {}, unsigned workers = 1) {
    if (repeats < 2) throw std::invalid_argument("check_determinism: repeats must be >= 2");
    auto first = run_transforms(program, inputs, limits, repeat_ambient_seed(0), workers);
    for (int r = 1; r < repeats; ++r) {
        auto again = run_transforms(program, inputs, limits, repeat_ambient_seed(r), workers);
        for (std::size_t i = 0; i < inputs.size(); ++i)
            if (!first[i].same_outcome(again[i])) return false;
    }
    return true;
}

struct ColorSymmetryReport {
    bool passed = true;
    std::string reason;
};

/// Color-permutation equivariance: for `perms` random permutations fixing
/// Black and every color in `fixed_colors`, transform(pi(x)) == pi(transform(x))
/// on every input. Inputs whose original run failed count as failures; runs
/// that both end in the same non-ok status are not compared.
inline ColorSymmetryReport check_color_symmetry(const CandidateProgram& program, const std::vector<Grid>& inputs,
                                                int perms, Rng& rng, std::span<const Color> fixed_colors = {},
                                                const ExecLimits& limits = {}, unsigned workers = 1) {
    if (perms < 1) throw std::invalid_argument("check_color_symmetry: perms must be >= 1");
    std::vector<Color> fixed{Color::Black};
    for (Color c : fixed_colors)
        if (std::find(fixed.begin(), fixed.end(), c) == fixed.end()) fixed.push_back(c);
    const auto base = run_transforms(program, inputs, limits, 0, workers);
    for (int p = 0; p < perms; ++p) {
        const auto aug = Augmentation::color_permute(random_perm(rng, fixed));
        std::vector<Grid> permuted;
        for (const auto& g : inputs) permuted.push_back(apply_augmentation(aug, g));
        const auto got = run_transforms(program, permuted, limits, 0, workers);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (base[i].status != got[i].status)
                return {false, "permutation " + std::to_string(p) + " changed status on input " + std::to_string(i) +
                                   " (" + status_name(base[i].status) + " -> " + status_name(got[i].status) + ")"};
            if (!base[i].ok()) continue;
            if (apply_augmentation(aug, *base[i].output) != *got[i].output)
                return {false, "output not equivariant under permutation " + std::to_string(p) + " on input " +
                                   std::to_string(i) + " (" + aug.describe() + ")"};
        }
    }
    return {};
}

} // namespace arckit::runtime
