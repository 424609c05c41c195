#pragma once

#include "arckit/core/color.hpp"
#include "arckit/core/error.hpp"
#include "arckit/core/grid.hpp"
#include "arckit/core/task.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace arckit {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// ARC JSON: grids are row-major arrays, row j holds the cells with y = j.
// ---------------------------------------------------------------------------

inline json grid_to_json(const Grid& g) {
    json rows = json::array();
    for (int y = 0; y < g.height(); ++y) {
        json row = json::array();
        for (int x = 0; x < g.width(); ++x) row.push_back(index_of(g.at(x, y)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Strict decode. `max_side` bounds both dimensions (task grids use 30).
inline Grid grid_from_json(const json& j, int max_side = kMaxTaskSide) {
    if (!j.is_array() || j.empty()) throw DataError("grid must be a non-empty array of rows");
    const std::size_t h = j.size();
    if (!j.front().is_array() || j.front().empty()) throw DataError("grid rows must be non-empty arrays");
    const std::size_t w = j.front().size();
    if (static_cast<int>(w) > max_side || static_cast<int>(h) > max_side)
        throw DataError("grid dimension " + std::to_string(w) + "x" + std::to_string(h) +
                        " exceeds " + std::to_string(max_side));
    Grid g(static_cast<int>(w), static_cast<int>(h));
    for (std::size_t y = 0; y < h; ++y) {
        const json& row = j[y];
        if (!row.is_array()) throw DataError("grid row is not an array");
        if (row.size() != w) throw DataError("ragged grid rows");
        for (std::size_t x = 0; x < w; ++x) {
            const json& v = row[x];
            if (!v.is_number_integer()) throw DataError("grid cell is not an integer");
            auto c = color_from_index(v.get<int>());
            if (!c) throw DataError("color out of range: " + v.dump());
            g.set(static_cast<int>(x), static_cast<int>(y), *c);
        }
    }
    return g;
}

inline json task_to_json(const Task& t) {
    json train = json::array();
    for (const auto& p : t.train) train.push_back({{"input", grid_to_json(p.input)}, {"output", grid_to_json(p.output)}});
    json test = json::array();
    for (std::size_t i = 0; i < t.test_inputs.size(); ++i) {
        json item = {{"input", grid_to_json(t.test_inputs[i])}};
        if (t.test_outputs) item["output"] = grid_to_json((*t.test_outputs)[i]);
        test.push_back(std::move(item));
    }
    return {{"train", std::move(train)}, {"test", std::move(test)}};
}

inline Task task_from_json(const json& doc, std::string id = {}) {
    if (!doc.is_object()) throw DataError("task document must be an object");
    if (!doc.contains("train") || !doc["train"].is_array()) throw DataError("task missing \"train\" array");
    if (!doc.contains("test") || !doc["test"].is_array()) throw DataError("task missing \"test\" array");
    Task t;
    t.id = std::move(id);
    for (const auto& item : doc["train"]) {
        if (!item.is_object() || !item.contains("input") || !item.contains("output"))
            throw DataError("train item needs input and output");
        t.train.push_back({grid_from_json(item["input"]), grid_from_json(item["output"])});
    }
    std::size_t with_output = 0;
    std::vector<Grid> outputs;
    for (const auto& item : doc["test"]) {
        if (!item.is_object() || !item.contains("input")) throw DataError("test item needs input");
        t.test_inputs.push_back(grid_from_json(item["input"]));
        if (item.contains("output")) {
            outputs.push_back(grid_from_json(item["output"]));
            ++with_output;
        }
    }
    if (with_output > 0) {
        if (with_output != t.test_inputs.size()) throw DataError("only some test items carry outputs");
        t.test_outputs = std::move(outputs);
    }
    validate_task(t);
    return t;
}

/// Parse a community-format ARC task document.
inline Task parse_task(std::string_view bytes, std::string id = {}) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("malformed task JSON: ") + e.what());
    }
    return task_from_json(doc, std::move(id));
}

// ---------------------------------------------------------------------------
// Prompt text: one color name per cell, single spaces, rows joined by '\n'.
// ---------------------------------------------------------------------------

inline std::string encode_grid_text(const Grid& g) {
    std::string out;
    out.reserve(static_cast<std::size_t>(g.area()) * 6);
    for (int y = 0; y < g.height(); ++y) {
        if (y > 0) out.push_back('\n');
        for (int x = 0; x < g.width(); ++x) {
            if (x > 0) out.push_back(' ');
            out.append(color_name(g.at(x, y)));
        }
    }
    return out;
}

using ColorAliases = std::map<std::string, Color, std::less<>>;

inline const ColorAliases& default_color_aliases() {
    static const ColorAliases aliases = {{"Grey", Color::Gray}, {"Maroon", Color::Brown}};
    return aliases;
}

inline Grid decode_grid_text(std::string_view text, const ColorAliases& aliases = default_color_aliases()) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    std::vector<std::vector<int>> rows;
    bool saw_blank = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        std::vector<int> row;
        for (std::size_t i = 0; i < line.size();) {
            while (i < line.size() && is_space(line[i])) ++i;
            std::size_t j = i;
            while (j < line.size() && !is_space(line[j])) ++j;
            if (j == i) break;
            std::string_view tok = line.substr(i, j - i);
            std::optional<Color> c = color_from_name(tok);
            if (!c) {
                auto it = aliases.find(tok);
                if (it == aliases.end()) throw DataError("unknown color token '" + std::string(tok) + "'");
                c = it->second;
            }
            row.push_back(index_of(*c));
            i = j;
        }
        if (row.empty()) {
            saw_blank = !rows.empty();
            continue;
        }
        if (saw_blank) throw DataError("blank line inside grid text");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DataError("empty grid text");
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw DataError("ragged grid text lines");
    if (rows.size() > static_cast<std::size_t>(kMaxWorkingSide) ||
        rows.front().size() > static_cast<std::size_t>(kMaxWorkingSide))
        throw DataError("grid text too large");
    return Grid::from_rows(rows);
}

} // namespace arckit
