#pragma once

// POSIX process runner used for external candidate programs. Isolation is
// best-effort: a fresh process group and scratch directory per run, rlimits
// on address space, CPU time and file size, and a private network namespace
// when the kernel allows unprivileged unshare.

#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <fcntl.h>
#include <poll.h>
#include <sched.h>
#include <sys/resource.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

extern char** environ;

namespace arckit::runtime {

struct ProcessSpec {
    std::string command;  // run through /bin/sh -c
    std::string stdin_data;
    int wall_timeout_ms = 2000;
    std::uint64_t memory_bytes = 256ull << 20;
    std::size_t max_stdout_bytes = 1 << 20;
    std::size_t max_stderr_bytes = 64 << 10;
    std::vector<std::pair<std::string, std::string>> extra_env;
    /// Files written into the scratch directory before launch.
    std::vector<std::pair<std::string, std::string>> files;
};

struct ProcessOutcome {
    bool launched = false;
    bool timed_out = false;
    bool stdout_overflow = false;
    std::optional<int> exit_code;
    std::optional<int> signal;
    std::string stdout_data;
    std::string stderr_data;
    double duration_ms = 0;
    std::string launch_error;
};

namespace detail {

inline void ignore_sigpipe_once() {
    static const bool done = [] {
        struct sigaction current {};
        sigaction(SIGPIPE, nullptr, &current);
        if (current.sa_handler == SIG_DFL) std::signal(SIGPIPE, SIG_IGN);
        return true;
    }();
    (void)done;
}

inline void set_nonblocking(int fd) { fcntl(fd, F_SETFL, fcntl(fd, F_GETFL) | O_NONBLOCK); }

class ScratchDir {
public:
    ScratchDir() {
        std::string tmpl = (std::filesystem::temp_directory_path() / "arckit-run-XXXXXX").string();
        if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed: " + std::string(std::strerror(errno)));
        path_ = tmpl;
    }
    ~ScratchDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

} // namespace detail

/// Runs one command to completion or until the wall timeout, feeding
/// stdin_data and collecting bounded stdout/stderr. Never throws for
/// program misbehavior; launch problems are reported in launch_error.
inline ProcessOutcome run_process(const ProcessSpec& spec) {
    using Clock = std::chrono::steady_clock;
    detail::ignore_sigpipe_once();
    ProcessOutcome out;

    std::optional<detail::ScratchDir> scratch;
    try {
        scratch.emplace();
        for (const auto& [name, content] : spec.files) {
            std::ofstream f(scratch->path() / name, std::ios::binary);
            f << content;
        }
    } catch (const std::exception& e) {
        out.launch_error = e.what();
        return out;
    }
    const std::string workdir = scratch->path().string();
    std::string command = spec.command;

    // Everything the child needs is prepared before fork.
    std::vector<std::string> env_strings;
    for (char** e = environ; e && *e; ++e) env_strings.emplace_back(*e);
    for (const auto& [k, v] : spec.extra_env) env_strings.push_back(k + "=" + v);
    env_strings.push_back("HOME=" + workdir);
    env_strings.push_back("TMPDIR=" + workdir);
    std::vector<char*> envp;
    for (auto& s : env_strings) envp.push_back(s.data());
    envp.push_back(nullptr);
    const char* argv[] = {"/bin/sh", "-c", command.c_str(), nullptr};

    int in_pipe[2], out_pipe[2], err_pipe[2];
    if (pipe2(in_pipe, O_CLOEXEC) || pipe2(out_pipe, O_CLOEXEC) || pipe2(err_pipe, O_CLOEXEC)) {
        out.launch_error = "pipe failed";
        return out;
    }

    const auto start = Clock::now();
    const rlim_t cpu_seconds = static_cast<rlim_t>(spec.wall_timeout_ms / 1000 + 2);
    const pid_t pid = fork();
    if (pid < 0) {
        out.launch_error = "fork failed";
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1], err_pipe[0], err_pipe[1]}) close(fd);
        return out;
    }
    if (pid == 0) {
        // Child: async-signal-safe calls only.
        setpgid(0, 0);
        unshare(CLONE_NEWNET);  // fails without privileges; isolation is best-effort
        if (chdir(workdir.c_str()) != 0) _exit(126);
        struct rlimit as {spec.memory_bytes, spec.memory_bytes};
        setrlimit(RLIMIT_AS, &as);
        struct rlimit cpu {cpu_seconds, cpu_seconds};
        setrlimit(RLIMIT_CPU, &cpu);
        struct rlimit fsize {16u << 20, 16u << 20};
        setrlimit(RLIMIT_FSIZE, &fsize);
        dup2(in_pipe[0], 0);
        dup2(out_pipe[1], 1);
        dup2(err_pipe[1], 2);
        signal(SIGPIPE, SIG_DFL);
        execve("/bin/sh", const_cast<char* const*>(argv), envp.data());
        _exit(127);
    }
    setpgid(pid, pid);  // also set from the parent to close the race
    out.launched = true;
    close(in_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[1]);
    int in_fd = in_pipe[1], out_fd = out_pipe[0], err_fd = err_pipe[0];
    detail::set_nonblocking(in_fd);
    detail::set_nonblocking(out_fd);
    detail::set_nonblocking(err_fd);

    std::size_t written = 0;
    if (spec.stdin_data.empty()) {
        close(in_fd);
        in_fd = -1;
    }
    const auto deadline = start + std::chrono::milliseconds(spec.wall_timeout_ms);
    bool killed = false;
    auto kill_group = [&] {
        if (!killed) kill(-pid, SIGKILL);
        killed = true;
    };

    char buf[65536];
    while (out_fd >= 0 || err_fd >= 0) {
        const auto now = Clock::now();
        if (now >= deadline) {
            out.timed_out = true;
            kill_group();
            break;
        }
        const int wait_ms =
            static_cast<int>(std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count()) + 1;
        struct pollfd fds[3];
        int nfds = 0;
        int idx_in = -1, idx_out = -1, idx_err = -1;
        if (in_fd >= 0) fds[idx_in = nfds++] = {in_fd, POLLOUT, 0};
        if (out_fd >= 0) fds[idx_out = nfds++] = {out_fd, POLLIN, 0};
        if (err_fd >= 0) fds[idx_err = nfds++] = {err_fd, POLLIN, 0};
        const int ready = poll(fds, nfds, wait_ms);
        if (ready < 0) {
            if (errno == EINTR) continue;
            kill_group();
            break;
        }
        if (idx_in >= 0 && fds[idx_in].revents) {
            if (fds[idx_in].revents & (POLLERR | POLLHUP)) {
                close(in_fd);
                in_fd = -1;
            } else {
                const ssize_t n = write(in_fd, spec.stdin_data.data() + written, spec.stdin_data.size() - written);
                if (n > 0) written += static_cast<std::size_t>(n);
                if ((n < 0 && errno != EAGAIN) || written == spec.stdin_data.size()) {
                    close(in_fd);
                    in_fd = -1;
                }
            }
        }
        auto drain = [&](int& fd, int idx, std::string& sink, std::size_t cap, bool is_stdout) {
            if (idx < 0 || !fds[idx].revents) return;
            const ssize_t n = read(fd, buf, sizeof buf);
            if (n > 0) {
                const std::size_t room = cap > sink.size() ? cap - sink.size() : 0;
                sink.append(buf, std::min<std::size_t>(room, static_cast<std::size_t>(n)));
                if (static_cast<std::size_t>(n) > room && is_stdout) {
                    out.stdout_overflow = true;
                    kill_group();
                }
            } else if (n == 0 || errno != EAGAIN) {
                close(fd);
                fd = -1;
            }
        };
        drain(out_fd, idx_out, out.stdout_data, spec.max_stdout_bytes, true);
        drain(err_fd, idx_err, out.stderr_data, spec.max_stderr_bytes, false);
        if (out.stdout_overflow) break;
    }
    for (int fd : {in_fd, out_fd, err_fd})
        if (fd >= 0) close(fd);

    // Streams are closed; the program should exit promptly. Enforce the deadline.
    int status = 0;
    for (;;) {
        const pid_t r = waitpid(pid, &status, WNOHANG);
        if (r == pid) break;
        if (r < 0 && errno != EINTR) break;
        if (Clock::now() >= deadline) {
            out.timed_out = true;
            kill_group();
            waitpid(pid, &status, 0);
            break;
        }
        usleep(1000);
    }
    kill(-pid, SIGKILL);  // reap any leftover members of the group
    out.duration_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (WIFEXITED(status)) out.exit_code = WEXITSTATUS(status);
    if (WIFSIGNALED(status)) out.signal = WTERMSIG(status);
    return out;
}

} // namespace arckit::runtime
