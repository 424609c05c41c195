#pragma once

#include "arckit/lib/basics.hpp"

#include <algorithm>
#include <functional>
#include <string_view>
#include <utility>

namespace arckit::lib {

/// Components of non-background cells, in row-major order of their first
/// cell. Each sprite is full size with non-member cells set to `background`.
inline std::vector<Sprite> find_connected_components(const Grid& grid, Color background = Color::Black,
                                                     Connectivity conn = Connectivity::Four,
                                                     bool monochromatic = true) {
    std::vector<Sprite> out;
    Mask assigned(grid.width(), grid.height());
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x) {
            if (assigned.at(x, y) || grid.at(x, y) == background) continue;
            const Color seed_color = grid.at(x, y);
            const Point start{x, y};
            Mask member = reachable(grid.width(), grid.height(), std::span(&start, 1), conn, [&](int px, int py) {
                const Color c = grid.at(px, py);
                return c != background && (!monochromatic || c == seed_color);
            });
            Sprite s(grid.width(), grid.height(), background);
            for (int py = 0; py < grid.height(); ++py)
                for (int px = 0; px < grid.width(); ++px)
                    if (member.at(px, py)) {
                        s.set(px, py, grid.at(px, py));
                        assigned.set(px, py);
                    }
            out.push_back(std::move(s));
        }
    return out;
}

struct Box {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
    friend bool operator==(const Box&, const Box&) = default;
};

/// Tight box around non-background cells; nullopt when there are none.
inline std::optional<Box> bounding_box(const Grid& grid, Color background = Color::Black) {
    int x0 = grid.width(), y0 = grid.height(), x1 = -1, y1 = -1;
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x)
            if (grid.at(x, y) != background) {
                x0 = std::min(x0, x);
                y0 = std::min(y0, y);
                x1 = std::max(x1, x);
                y1 = std::max(y1, y);
            }
    if (x1 < 0) return std::nullopt;
    return Box{x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

inline Grid crop(const Grid& grid, Color background = Color::Black) {
    auto box = bounding_box(grid, background);
    if (!box) throw std::invalid_argument("crop: grid has no non-background cells");
    Grid out(box->width, box->height);
    for (int y = 0; y < box->height; ++y)
        for (int x = 0; x < box->width; ++x) out.set(x, y, grid.at(box->x + x, box->y + y));
    return out;
}

enum class Anchor { UpperLeft, UpperRight, LowerLeft, LowerRight, Center, UpperCenter, LowerCenter, LeftCenter, RightCenter };

inline Anchor anchor_from_name(std::string_view name) {
    static constexpr std::pair<std::string_view, Anchor> kNames[] = {
        {"upper left", Anchor::UpperLeft},     {"upper right", Anchor::UpperRight},
        {"lower left", Anchor::LowerLeft},     {"lower right", Anchor::LowerRight},
        {"center", Anchor::Center},            {"upper center", Anchor::UpperCenter},
        {"lower center", Anchor::LowerCenter}, {"left center", Anchor::LeftCenter},
        {"right center", Anchor::RightCenter},
    };
    for (auto [n, a] : kNames)
        if (n == name) return a;
    throw std::invalid_argument("unknown anchor: " + std::string(name));
}

/// Anchor point of the object's bounding box. Centers are the integer
/// midpoint, rounded toward the upper left.
inline Point object_position(const Grid& grid, Color background = Color::Black, Anchor anchor = Anchor::UpperLeft) {
    auto box = bounding_box(grid, background);
    if (!box) throw std::invalid_argument("object_position: grid has no non-background cells");
    const int left = box->x, top = box->y;
    const int right = box->x + box->width - 1, bottom = box->y + box->height - 1;
    const int mid_x = (left + right) / 2, mid_y = (top + bottom) / 2;
    switch (anchor) {
    case Anchor::UpperLeft: return {left, top};
    case Anchor::UpperRight: return {right, top};
    case Anchor::LowerLeft: return {left, bottom};
    case Anchor::LowerRight: return {right, bottom};
    case Anchor::Center: return {mid_x, mid_y};
    case Anchor::UpperCenter: return {mid_x, top};
    case Anchor::LowerCenter: return {mid_x, bottom};
    case Anchor::LeftCenter: return {left, mid_y};
    case Anchor::RightCenter: return {right, mid_y};
    }
    return {left, top};
}

enum class InteractMode { Collision, Contact };

/// Collision: some non-background cell of each object lands on the same
/// absolute cell. Contact: collision, or adjacency under `conn`.
inline bool interact(InteractMode mode, const Sprite& object1, const Sprite& object2, int x1, int y1, int x2, int y2,
                     Color background = Color::Black, Connectivity conn = Connectivity::Four) {
    // Occupancy of object1 in absolute coordinates, stored relative to its origin.
    auto occupied1 = [&](int ax, int ay) {
        const int lx = ax - x1, ly = ay - y1;
        return object1.in_bounds(lx, ly) && object1.at(lx, ly) != background;
    };
    for (int y = 0; y < object2.height(); ++y)
        for (int x = 0; x < object2.width(); ++x) {
            if (object2.at(x, y) == background) continue;
            const int ax = x2 + x, ay = y2 + y;
            if (occupied1(ax, ay)) return true;
            if (mode == InteractMode::Contact)
                for (Point d : neighbor_offsets(conn))
                    if (occupied1(ax + d.x, ay + d.y)) return true;
        }
    return false;
}

inline bool collision(const Sprite& object1, const Sprite& object2, int x1 = 0, int y1 = 0, int x2 = 0, int y2 = 0,
                      Color background = Color::Black) {
    return interact(InteractMode::Collision, object1, object2, x1, y1, x2, y2, background);
}

inline bool contact(const Sprite& object1, const Sprite& object2, int x1 = 0, int y1 = 0, int x2 = 0, int y2 = 0,
                    Color background = Color::Black, Connectivity conn = Connectivity::Four) {
    return interact(InteractMode::Contact, object1, object2, x1, y1, x2, y2, background, conn);
}

enum class RegionKind { Interior, Boundary, Neighbors };

namespace detail {

/// Cells reachable from outside the grid through background cells.
inline Mask outside_mask(const Grid& grid, Color background, Connectivity conn) {
    const int w = grid.width() + 2, h = grid.height() + 2;
    const Point start{0, 0};
    Mask padded = reachable(w, h, std::span(&start, 1), conn, [&](int px, int py) {
        if (px == 0 || py == 0 || px == w - 1 || py == h - 1) return true;
        return grid.at(px - 1, py - 1) == background;
    });
    Mask out(grid.width(), grid.height());
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x) out.set(x, y, padded.at(x + 1, y + 1));
    return out;
}

} // namespace detail

inline Mask object_interior(const Grid& grid, Color background = Color::Black, Connectivity conn = Connectivity::Four) {
    Mask outside = detail::outside_mask(grid, background, conn);
    Mask out(grid.width(), grid.height());
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x) out.set(x, y, !outside.at(x, y));
    return out;
}

inline Mask object_boundary(const Grid& grid, Color background = Color::Black, Connectivity conn = Connectivity::Four) {
    Mask interior = object_interior(grid, background, conn);
    Mask out(grid.width(), grid.height());
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x) {
            if (!interior.at(x, y)) continue;
            bool touches_outside = false;
            for (Point d : neighbor_offsets(conn)) {
                const int nx = x + d.x, ny = y + d.y;
                touches_outside = touches_outside || !interior.in_bounds(nx, ny) || !interior.at(nx, ny);
            }
            out.set(x, y, touches_outside);
        }
    return out;
}

inline Mask object_neighbors(const Grid& grid, Color background = Color::Black, Connectivity conn = Connectivity::Four) {
    Mask out(grid.width(), grid.height());
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x) {
            if (grid.at(x, y) != background) continue;
            bool adjacent = false;
            for (Point d : neighbor_offsets(conn)) {
                const int nx = x + d.x, ny = y + d.y;
                adjacent = adjacent || (grid.in_bounds(nx, ny) && grid.at(nx, ny) != background);
            }
            out.set(x, y, adjacent);
        }
    return out;
}

inline Mask region_mask(RegionKind kind, const Grid& grid, Color background = Color::Black,
                        Connectivity conn = Connectivity::Four) {
    switch (kind) {
    case RegionKind::Interior: return object_interior(grid, background, conn);
    case RegionKind::Boundary: return object_boundary(grid, background, conn);
    case RegionKind::Neighbors: return object_neighbors(grid, background, conn);
    }
    return Mask(grid.width(), grid.height());
}

inline bool is_contiguous(const Grid& grid, Color background = Color::Black, Connectivity conn = Connectivity::Four) {
    return find_connected_components(grid, background, conn, false).size() <= 1;
}

struct ObjectQuery {
    std::function<bool(const Sprite&)> predicate;
    Color background = Color::Black;
    bool monochromatic = false;
    /// Unset: 4-way, except monochromatic queries switch to 8-way when that
    /// merges 4-way components into fewer objects.
    std::optional<Connectivity> connectivity;
    /// (width, height) of the object's bounding box.
    std::optional<std::vector<std::pair<int, int>>> allowed_dimensions;
    std::optional<std::vector<Color>> colors;
    /// Also report every window of an allowed size whose content passes the filters.
    bool can_overlap = false;
};

inline std::vector<Sprite> detect_objects(const Grid& grid, const ObjectQuery& query = {}) {
    if (query.allowed_dimensions)
        for (auto [w, h] : *query.allowed_dimensions)
            if (w <= 0 || h <= 0) throw std::invalid_argument("detect_objects: allowed dimensions must be positive");

    Connectivity conn = query.connectivity.value_or(Connectivity::Four);
    if (!query.connectivity && query.monochromatic) {
        auto four = find_connected_components(grid, query.background, Connectivity::Four, true);
        auto eight = find_connected_components(grid, query.background, Connectivity::Eight, true);
        if (eight.size() < four.size()) conn = Connectivity::Eight;
    }

    auto passes = [&](const Sprite& s) {
        auto box = bounding_box(s, query.background);
        if (!box) return false;
        if (query.allowed_dimensions) {
            bool ok = false;
            for (auto [w, h] : *query.allowed_dimensions) ok = ok || (box->width == w && box->height == h);
            if (!ok) return false;
        }
        if (query.colors) {
            for (Color c : s.cells()) {
                if (c == query.background) continue;
                if (std::find(query.colors->begin(), query.colors->end(), c) == query.colors->end()) return false;
            }
        }
        return !query.predicate || query.predicate(s);
    };

    std::vector<Sprite> out;
    for (auto& s : find_connected_components(grid, query.background, conn, query.monochromatic))
        if (passes(s)) out.push_back(std::move(s));

    if (query.can_overlap && query.allowed_dimensions) {
        for (auto [w, h] : *query.allowed_dimensions)
            for (int y = 0; y + h <= grid.height(); ++y)
                for (int x = 0; x + w <= grid.width(); ++x) {
                    Sprite s(grid.width(), grid.height(), query.background);
                    for (int wy = 0; wy < h; ++wy)
                        for (int wx = 0; wx < w; ++wx) s.set(x + wx, y + wy, grid.at(x + wx, y + wy));
                    // Windows must be tight around their content.
                    auto box = bounding_box(s, query.background);
                    if (!box || *box != Box{x, y, w, h}) continue;
                    if (query.monochromatic) {
                        bool mono = true;
                        std::optional<Color> first;
                        for (Color c : s.cells()) {
                            if (c == query.background) continue;
                            if (!first) first = c;
                            mono = mono && c == *first;
                        }
                        if (!mono) continue;
                    }
                    if (!passes(s)) continue;
                    if (std::find(out.begin(), out.end(), s) != out.end()) continue;
                    out.push_back(std::move(s));
                }
    }
    return out;
}

} // namespace arckit::lib
