#pragma once

// Task files on disk: one community-format JSON document per file, id taken
// from the file stem.

#include "arckit/core/codec.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace arckit {

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot read " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline Task load_task_file(const std::filesystem::path& path) {
    try {
        return parse_task(read_text_file(path), path.stem().string());
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

/// A single task file, or every *.json in a directory in filename order.
inline std::vector<Task> load_tasks(const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(path)) return {load_task_file(path)};
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(path))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<Task> out;
    for (const auto& f : files) out.push_back(load_task_file(f));
    return out;
}

inline void save_task_file(const std::filesystem::path& path, const Task& t) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot write " + path.string());
    f << task_to_json(t).dump() << "\n";
}

} // namespace arckit
