#pragma once

#include "arckit/core/grid.hpp"
#include "arckit/core/rng.hpp"

#include <array>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace arckit::lib {

enum class Connectivity { Four = 4, Eight = 8 };

inline Connectivity connectivity_from_int(int ways) {
    if (ways == 4) return Connectivity::Four;
    if (ways == 8) return Connectivity::Eight;
    throw std::invalid_argument("connectivity must be 4 or 8");
}

inline std::span<const Point> neighbor_offsets(Connectivity c) {
    static constexpr std::array<Point, 8> kOffsets = {{
        {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1},
    }};
    return {kOffsets.data(), c == Connectivity::Four ? 4u : 8u};
}

/// Grid whose `background` cells are transparent.
using Sprite = Grid;

/// Boolean field aligned with a source grid.
class Mask {
public:
    Mask() = default;
    Mask(int width, int height, bool value = false)
        : width_(width), height_(height), bits_(static_cast<std::size_t>(width) * height, value ? 1 : 0) {}

    int width() const { return width_; }
    int height() const { return height_; }
    bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
    bool at(int x, int y) const { return bits_[static_cast<std::size_t>(y) * width_ + x] != 0; }
    void set(int x, int y, bool v = true) { bits_[static_cast<std::size_t>(y) * width_ + x] = v ? 1 : 0; }

    int count() const {
        int n = 0;
        for (auto b : bits_) n += b;
        return n;
    }

    friend bool operator==(const Mask&, const Mask&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Cells reachable from `start` stepping only onto cells where `passable` holds.
template <typename Passable>
Mask reachable(int width, int height, std::span<const Point> starts, Connectivity conn, Passable&& passable) {
    Mask seen(width, height);
    std::deque<Point> queue;
    for (Point s : starts) {
        if (s.x < 0 || s.y < 0 || s.x >= width || s.y >= height) continue;
        if (seen.at(s.x, s.y) || !passable(s.x, s.y)) continue;
        seen.set(s.x, s.y);
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        for (Point d : neighbor_offsets(conn)) {
            int nx = p.x + d.x, ny = p.y + d.y;
            if (nx < 0 || ny < 0 || nx >= width || ny >= height || seen.at(nx, ny)) continue;
            if (!passable(nx, ny)) continue;
            seen.set(nx, ny);
            queue.push_back({nx, ny});
        }
    }
    return seen;
}

/// Region containing (x, y) through cells of its original color becomes `color`.
inline Grid flood_fill(const Grid& grid, int x, int y, Color color, Connectivity conn = Connectivity::Four) {
    if (!grid.in_bounds(x, y)) throw std::out_of_range("flood_fill: seed point out of bounds");
    const Color original = grid.at(x, y);
    Grid out = grid;
    if (original == color) return out;
    const Point start{x, y};
    Mask region = reachable(grid.width(), grid.height(), std::span(&start, 1), conn,
                            [&](int px, int py) { return grid.at(px, py) == original; });
    for (int py = 0; py < grid.height(); ++py)
        for (int px = 0; px < grid.width(); ++px)
            if (region.at(px, py)) out.set(px, py, color);
    return out;
}

struct LineSpec {
    int x = 0;
    int y = 0;
    std::optional<Point> end;
    /// Unset with `end` unset means: run until the grid edge.
    std::optional<int> length;
    Point direction{1, 0};
    Color color = Color::Black;
    std::vector<Color> stop_at_colors;
};

/// Rasterized ray. The line stops before the first cell whose color is in
/// `stop_at_colors`, and at the grid edge.
inline Grid draw_line(const Grid& grid, const LineSpec& spec) {
    if (!grid.in_bounds(spec.x, spec.y)) throw std::out_of_range("draw_line: start out of bounds");
    Point dir = spec.direction;
    std::optional<int> length = spec.length;
    if (spec.end) {
        if (spec.length) throw std::invalid_argument("draw_line: give either an end point or a length");
        const int ddx = spec.end->x - spec.x, ddy = spec.end->y - spec.y;
        const int adx = ddx < 0 ? -ddx : ddx, ady = ddy < 0 ? -ddy : ddy;
        if (adx != 0 && ady != 0 && adx != ady)
            throw std::invalid_argument("draw_line: end point is not on a horizontal, vertical or diagonal ray");
        dir = {(ddx > 0) - (ddx < 0), (ddy > 0) - (ddy < 0)};
        length = (adx > ady ? adx : ady) + 1;
        if (adx == 0 && ady == 0) dir = {1, 0};
    }
    if (dir.x < -1 || dir.x > 1 || dir.y < -1 || dir.y > 1)
        throw std::invalid_argument("draw_line: direction components must be -1, 0 or 1");
    if (dir.x == 0 && dir.y == 0) throw std::invalid_argument("draw_line: zero direction");
    if (length && *length < 0) throw std::invalid_argument("draw_line: negative length");

    Grid out = grid;
    int px = spec.x, py = spec.y;
    for (int step = 0; !length || step < *length; ++step) {
        if (!out.in_bounds(px, py)) break;
        bool stop = false;
        for (Color c : spec.stop_at_colors) stop = stop || out.at(px, py) == c;
        if (stop) break;
        out.set(px, py, spec.color);
        px += dir.x;
        py += dir.y;
    }
    return out;
}

/// Draws non-background sprite cells at offset (x, y), clipping off-grid
/// cells. With `background` unset every sprite cell is opaque.
inline Grid blit(const Grid& grid, const Sprite& sprite, int x, int y,
                 std::optional<Color> background = Color::Black) {
    Grid out = grid;
    for (int sy = 0; sy < sprite.height(); ++sy)
        for (int sx = 0; sx < sprite.width(); ++sx) {
            const Color c = sprite.at(sx, sy);
            if (background && c == *background) continue;
            if (out.in_bounds(x + sx, y + sy)) out.set(x + sx, y + sy, c);
        }
    return out;
}

inline Sprite translate(const Sprite& sprite, int dx, int dy, Color background = Color::Black) {
    Sprite out(sprite.width(), sprite.height(), background);
    for (int y = 0; y < sprite.height(); ++y)
        for (int x = 0; x < sprite.width(); ++x)
            if (sprite.in_bounds(x - dx, y - dy)) out.set(x, y, sprite.at(x - dx, y - dy));
    return out;
}

inline Sprite scale_pattern(const Sprite& sprite, int factor) {
    if (factor < 1) throw std::invalid_argument("scale_pattern: factor must be >= 1");
    Sprite out(sprite.width() * factor, sprite.height() * factor);
    for (int y = 0; y < out.height(); ++y)
        for (int x = 0; x < out.width(); ++x) out.set(x, y, sprite.at(x / factor, y / factor));
    return out;
}

inline Grid scatter_points(const Grid& grid, Color color, double density, Rng& rng,
                           Color background = Color::Black) {
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("scatter_points: density outside [0, 1]");
    Grid out = grid;
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x)
            if (grid.at(x, y) == background && rng.bernoulli(density)) out.set(x, y, color);
    return out;
}

} // namespace arckit::lib
