#pragma once

#include "arckit/core/color.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace arckit {

/// Largest side accepted for a task grid.
inline constexpr int kMaxTaskSide = 30;

/// Working grids may grow past task bounds (e.g. intermediate canvases),
/// but not without limit.
inline constexpr int kMaxWorkingSide = 1024;

/// Dense width x height field of colors. `x` is the column, `y` the row.
class Grid {
public:
    Grid() = default;

    Grid(int width, int height, Color fill = Color::Black) : width_(width), height_(height) {
        if (width < 1 || height < 1 || width > kMaxWorkingSide || height > kMaxWorkingSide)
            throw std::invalid_argument("grid dimensions out of range: " + std::to_string(width) +
                                        "x" + std::to_string(height));
        cells_.assign(static_cast<std::size_t>(width) * height, fill);
    }

    /// Row-major construction: rows[y][x].
    static Grid from_rows(const std::vector<std::vector<int>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("grid must have at least one row and column");
        const int h = static_cast<int>(rows.size());
        const int w = static_cast<int>(rows.front().size());
        Grid g(w, h);
        for (int y = 0; y < h; ++y) {
            if (static_cast<int>(rows[y].size()) != w) throw std::invalid_argument("ragged rows");
            for (int x = 0; x < w; ++x) {
                auto c = color_from_index(rows[y][x]);
                if (!c) throw std::invalid_argument("color out of range: " + std::to_string(rows[y][x]));
                g.set(x, y, *c);
            }
        }
        return g;
    }

    int width() const { return width_; }
    int height() const { return height_; }
    int area() const { return width_ * height_; }
    bool empty() const { return cells_.empty(); }

    bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

    Color at(int x, int y) const { return cells_[index(x, y)]; }
    void set(int x, int y, Color c) { cells_[index(x, y)] = c; }

    Color checked_at(int x, int y) const {
        if (!in_bounds(x, y)) throw std::out_of_range("grid access out of bounds");
        return at(x, y);
    }

    const std::vector<Color>& cells() const { return cells_; }

    void fill(Color c) { std::fill(cells_.begin(), cells_.end(), c); }

    bool is_task_grid() const {
        return width_ >= 1 && height_ >= 1 && width_ <= kMaxTaskSide && height_ <= kMaxTaskSide;
    }

    bool contains(Color c) const { return std::find(cells_.begin(), cells_.end(), c) != cells_.end(); }

    int count(Color c) const { return static_cast<int>(std::count(cells_.begin(), cells_.end(), c)); }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(height_, std::vector<int>(width_));
        for (int y = 0; y < height_; ++y)
            for (int x = 0; x < width_; ++x) out[y][x] = index_of(at(x, y));
        return out;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }

    int width_ = 0;
    int height_ = 0;
    std::vector<Color> cells_;
};

struct Point {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

} // namespace arckit
