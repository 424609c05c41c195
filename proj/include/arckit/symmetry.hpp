#pragma once

#include "arckit/core/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace arckit::symmetry {

/// A coordinate that may sit halfway between cells, stored doubled.
struct HalfInt {
    int twice = 0;
    static constexpr HalfInt from_double(double v) { return {static_cast<int>(v * 2 + (v < 0 ? -0.5 : 0.5))}; }
    constexpr double value() const { return twice / 2.0; }
    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

struct Translation {
    int dx = 0;
    int dy = 0;
    friend bool operator==(const Translation&, const Translation&) = default;
};

/// grid[x, y] == grid[2*mirror_x - x, 2*mirror_y - y]; an unset coordinate
/// is left unchanged. A vertical axis reflects x, a horizontal axis reflects y.
struct Mirror {
    std::optional<HalfInt> mirror_x;
    std::optional<HalfInt> mirror_y;

    static Mirror vertical_axis(HalfInt x) { return {x, std::nullopt}; }
    static Mirror horizontal_axis(HalfInt y) { return {std::nullopt, y}; }

    friend bool operator==(const Mirror&, const Mirror&) = default;
};

enum class Direction { Clockwise, CounterClockwise };

/// Quarter turn about a (possibly half-integral) center. One clockwise step:
/// (x, y) -> (y - cy + cx, -x + cy + cx).
struct Rotation {
    HalfInt center_x;
    HalfInt center_y;
    Direction direction = Direction::Clockwise;
    friend bool operator==(const Rotation&, const Rotation&) = default;
};

using Symmetry = std::variant<Translation, Mirror, Rotation>;

namespace detail {

inline Point rotate_cw(Point p, const Rotation& r) {
    // both doubled sums are even for centers produced by the detector
    const int a = (r.center_x.twice - r.center_y.twice) / 2;
    const int b = (r.center_x.twice + r.center_y.twice) / 2;
    return {p.y + a, -p.x + b};
}

inline bool ignored(Color c, std::span<const Color> ignore) {
    return std::find(ignore.begin(), ignore.end(), c) != ignore.end();
}

// Result of checking one candidate map over every cell.
struct Check {
    bool consistent = true;
    int witnesses = 0;        // compared pairs of distinct cells
    bool self_only = true;    // no distinct pair was compared
};

template <typename Map>
Check check_map(const Grid& g, std::span<const Color> ignore, Map&& map) {
    Check res;
    for (int y = 0; y < g.height(); ++y)
        for (int x = 0; x < g.width(); ++x) {
            const Color c = g.at(x, y);
            if (ignored(c, ignore)) continue;
            const Point q = map(Point{x, y});
            if (!g.in_bounds(q.x, q.y)) continue;
            const Color d = g.at(q.x, q.y);
            if (ignored(d, ignore)) continue;
            if (c != d) {
                res.consistent = false;
                return res;
            }
            if (q.x != x || q.y != y) {
                ++res.witnesses;
                res.self_only = false;
            }
        }
    return res;
}

inline bool has_visible_cell(const Grid& g, std::span<const Color> ignore) {
    for (Color c : g.cells())
        if (!ignored(c, ignore)) return true;
    return false;
}

} // namespace detail

/// Apply `s` to (x, y) `iters` times; negative iters apply the inverse.
inline Point apply(const Symmetry& s, int x, int y, int iters = 1) {
    Point p{x, y};
    if (const auto* t = std::get_if<Translation>(&s)) return {x + iters * t->dx, y + iters * t->dy};
    if (const auto* m = std::get_if<Mirror>(&s)) {
        if (iters % 2 == 0) return p;
        if (m->mirror_x) p.x = m->mirror_x->twice - p.x;
        if (m->mirror_y) p.y = m->mirror_y->twice - p.y;
        return p;
    }
    const auto& r = std::get<Rotation>(s);
    int steps = ((iters % 4) + 4) % 4;
    if (r.direction == Direction::CounterClockwise) steps = (4 - steps) % 4;
    for (int i = 0; i < steps; ++i) p = detail::rotate_cw(p, r);
    return p;
}

/// Generators of the translation lattice consistent with `grid`: the
/// smallest vertical period (0, py), and the translation with the smallest
/// positive dx, its dy reduced modulo py and chosen by |dy| (negative
/// first). A candidate is accepted only if it is witnessed and every lattice
/// point it spans inside the grid is consistent, which rejects coincidences
/// that hold on a sliver of overlap. Sorted by (|dx|+|dy|, dx, dy).
inline std::vector<Symmetry> detect_translational(const Grid& grid, std::span<const Color> ignore_colors = {}) {
    const int w = grid.width(), h = grid.height();
    auto check = [&](int dx, int dy) {
        return detail::check_map(grid, ignore_colors, [&](Point p) { return Point{p.x + dx, p.y + dy}; });
    };
    auto witnessed = [&](int dx, int dy) {
        auto res = check(dx, dy);
        return res.consistent && res.witnesses > 0;
    };
    // Every nonzero a*(dx, dy) + b*(0, py) inside the search box is consistent.
    auto lattice_consistent = [&](int dx, int dy, int py) {
        const int a_max = dx ? (w - 1) / dx : 0;
        const int b_max = py ? (2 * h + std::abs(dy) * a_max) / py + 1 : 0;
        for (int a = -a_max; a <= a_max; ++a)
            for (int b = -b_max; b <= b_max; ++b) {
                const int x = a * dx, y = a * dy + b * py;
                if ((x == 0 && y == 0) || std::abs(y) >= h) continue;
                if (!check(x, y).consistent) return false;
            }
        return true;
    };

    std::vector<Translation> gens;
    int py = 0;
    for (int dy = 1; dy < h && py == 0; ++dy)
        if (witnessed(0, dy) && lattice_consistent(0, 0, dy)) py = dy;
    if (py) gens.push_back({0, py});

    // With a vertical period, dy only matters modulo py.
    const int max_k = py ? py / 2 : h - 1;
    std::optional<Translation> gx;
    for (int dx = 1; dx < w && !gx; ++dx)
        for (int k = 0; k <= max_k && !gx; ++k) {
            std::vector<int> dys{-k};
            if (k > 0 && 2 * k != py) dys.push_back(k);
            for (int dy : dys)
                if (!gx && witnessed(dx, dy) && lattice_consistent(dx, dy, py)) gx = Translation{dx, dy};
        }
    if (gx) gens.push_back(*gx);

    std::sort(gens.begin(), gens.end(), [](const Translation& a, const Translation& b) {
        const int na = std::abs(a.dx) + std::abs(a.dy), nb = std::abs(b.dx) + std::abs(b.dy);
        if (na != nb) return na < nb;
        if (a.dx != b.dx) return a.dx < b.dx;
        return a.dy < b.dy;
    });
    return {gens.begin(), gens.end()};
}

namespace detail {

// Chooses the best-supported consistent candidate. A candidate that only ever
// compares a cell with itself counts only when it maps the whole grid onto
// itself (e.g. the central axis of a one-cell-wide grid).
struct Scored {
    int witnesses = -1;
    int center_distance = 0;  // doubled distance to the grid's own center
    std::pair<int, int> key;  // lexicographic tie-break
};

inline bool better(const Scored& a, const Scored& b) {
    if (a.witnesses != b.witnesses) return a.witnesses > b.witnesses;
    if (a.center_distance != b.center_distance) return a.center_distance < b.center_distance;
    return a.key < b.key;
}

} // namespace detail

/// At most one mirror per axis: vertical axis (reflects x) first, then
/// horizontal axis (reflects y).
inline std::vector<Symmetry> detect_mirror(const Grid& grid, std::span<const Color> ignore_colors = {}) {
    std::vector<Symmetry> out;
    if (!detail::has_visible_cell(grid, ignore_colors)) return out;

    auto search = [&](int extent, bool reflect_x) -> std::optional<HalfInt> {
        std::optional<detail::Scored> best;
        std::optional<HalfInt> best_pos;
        for (int twice = 0; twice <= 2 * (extent - 1); ++twice) {
            auto res = detail::check_map(grid, ignore_colors, [&](Point p) {
                return reflect_x ? Point{twice - p.x, p.y} : Point{p.x, twice - p.y};
            });
            if (!res.consistent) continue;
            const bool whole = twice == extent - 1;
            if (res.self_only && !whole) continue;
            detail::Scored sc{res.witnesses, std::abs(twice - (extent - 1)), {twice, 0}};
            if (!best || detail::better(sc, *best)) {
                best = sc;
                best_pos = HalfInt{twice};
            }
        }
        return best_pos;
    };
    if (auto x = search(grid.width(), true)) out.push_back(Mirror::vertical_axis(*x));
    if (auto y = search(grid.height(), false)) out.push_back(Mirror::horizontal_axis(*y));
    return out;
}

/// Best-supported clockwise quarter-turn center, or nullopt.
inline std::optional<Symmetry> detect_rotational(const Grid& grid, std::span<const Color> ignore_colors = {}) {
    if (!detail::has_visible_cell(grid, ignore_colors)) return std::nullopt;
    std::optional<detail::Scored> best;
    std::optional<Rotation> best_rot;
    const int twice_mid_x = grid.width() - 1, twice_mid_y = grid.height() - 1;
    for (int tcx = 0; tcx <= 2 * (grid.width() - 1); ++tcx)
        for (int tcy = 0; tcy <= 2 * (grid.height() - 1); ++tcy) {
            if ((tcx + tcy) % 2 != 0) continue;  // image of a cell must be a cell
            Rotation r{{tcx}, {tcy}, Direction::Clockwise};
            auto res = detail::check_map(grid, ignore_colors, [&](Point p) { return detail::rotate_cw(p, r); });
            if (!res.consistent) continue;
            const bool whole = grid.width() == grid.height() && tcx == twice_mid_x && tcy == twice_mid_y;
            if (res.self_only && !whole) continue;
            detail::Scored sc{res.witnesses, std::abs(tcx - twice_mid_x) + std::abs(tcy - twice_mid_y), {tcx, tcy}};
            if (!best || detail::better(sc, *best)) {
                best = sc;
                best_rot = r;
            }
        }
    if (!best_rot) return std::nullopt;
    return Symmetry{*best_rot};
}

/// Closure of (x, y) under the symmetries and their inverses, restricted to
/// in-bounds cells. The starting point comes first.
inline std::vector<Point> orbit(const Grid& grid, int x, int y, std::span<const Symmetry> symmetries) {
    if (!grid.in_bounds(x, y)) throw std::out_of_range("orbit: point out of bounds");
    std::vector<Point> out{{x, y}};
    std::set<Point> seen{{x, y}};
    std::deque<Point> queue{{x, y}};
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        for (const auto& s : symmetries)
            for (int iters : {1, -1}) {
                Point q = apply(s, p.x, p.y, iters);
                if (!grid.in_bounds(q.x, q.y) || !seen.insert(q).second) continue;
                out.push_back(q);
                queue.push_back(q);
            }
    }
    return out;
}

class AmbiguousOrbitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Recolors every ignored cell with the one visible color found on its
/// orbit. Cells whose orbit is entirely ignored are left as they are.
inline Grid fill_from_orbits(const Grid& grid, std::span<const Color> ignore_colors,
                             std::span<const Symmetry> symmetries) {
    Grid out = grid;
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x) {
            if (!detail::ignored(grid.at(x, y), ignore_colors)) continue;
            std::optional<Color> found;
            for (Point p : orbit(grid, x, y, symmetries)) {
                const Color c = grid.at(p.x, p.y);
                if (detail::ignored(c, ignore_colors)) continue;
                if (found && *found != c) throw AmbiguousOrbitError("multiple colors in the orbit");
                found = c;
            }
            if (found) out.set(x, y, *found);
        }
    return out;
}

} // namespace arckit::symmetry
