#pragma once

#include "arckit/lib/objects.hpp"

#include <cmath>
#include <string_view>

namespace arckit::lib {

class NoPlacementError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PlacementOptions {
    Color background = Color::Black;
    /// Minimum distance between the sprite and the grid edge.
    int border_size = 0;
    /// Sprite cells are dilated this many steps before the collision test.
    int padding = 0;
    Connectivity padding_connectivity = Connectivity::Eight;
};

/// Sprite grown by `steps` dilation rounds; the result carries a margin of
/// `steps` cells on every side, so its origin sits at (-steps, -steps).
inline Sprite dilate(const Sprite& sprite, int steps, Connectivity conn, Color background) {
    if (steps <= 0) return sprite;
    Sprite cur(sprite.width() + 2 * steps, sprite.height() + 2 * steps, background);
    cur = blit(cur, sprite, steps, steps, background);
    // Any non-background marker works; collision only looks at occupancy.
    const Color marker = background == Color::Blue ? Color::Red : Color::Blue;
    for (int s = 0; s < steps; ++s) {
        Sprite next = cur;
        for (int y = 0; y < cur.height(); ++y)
            for (int x = 0; x < cur.width(); ++x) {
                if (cur.at(x, y) != background) continue;
                for (Point d : neighbor_offsets(conn)) {
                    const int nx = x + d.x, ny = y + d.y;
                    if (cur.in_bounds(nx, ny) && cur.at(nx, ny) != background) {
                        next.set(x, y, marker);
                        break;
                    }
                }
            }
        cur = std::move(next);
    }
    return cur;
}

/// Every top-left offset at which the sprite respects the border and its
/// padded footprint does not collide with the grid.
inline std::vector<Point> free_locations(const Grid& grid, const Sprite& sprite, const PlacementOptions& opt = {}) {
    std::vector<Point> out;
    const Sprite padded = dilate(sprite, opt.padding, opt.padding_connectivity, opt.background);
    const int b = opt.border_size;
    for (int y = b; y + sprite.height() <= grid.height() - b; ++y)
        for (int x = b; x + sprite.width() <= grid.width() - b; ++x)
            if (!collision(grid, padded, 0, 0, x - opt.padding, y - opt.padding, opt.background)) out.push_back({x, y});
    return out;
}

/// Uniform choice among free_locations(); throws NoPlacementError if none.
inline Point random_free_location(const Grid& grid, const Sprite& sprite, Rng& rng, const PlacementOptions& opt = {}) {
    auto candidates = free_locations(grid, sprite, opt);
    if (candidates.empty()) throw NoPlacementError("no free location for sprite");
    return candidates[rng.index(candidates.size())];
}

enum class SpriteSymmetry { Horizontal, Vertical, Diagonal, Radial, NotSymmetric };

inline SpriteSymmetry sprite_symmetry_from_name(std::string_view name) {
    if (name == "horizontal") return SpriteSymmetry::Horizontal;
    if (name == "vertical") return SpriteSymmetry::Vertical;
    if (name == "diagonal") return SpriteSymmetry::Diagonal;
    if (name == "radial") return SpriteSymmetry::Radial;
    if (name == "not_symmetric") return SpriteSymmetry::NotSymmetric;
    throw std::invalid_argument("unknown sprite symmetry: " + std::string(name));
}

struct SpriteSpec {
    /// Candidate widths and heights; one of each is drawn.
    std::vector<int> widths{3};
    std::vector<int> heights{3};
    double density = 0.5;
    /// Unset: drawn uniformly from the five kinds.
    std::optional<SpriteSymmetry> symmetry;
    /// Unset: a single random non-background color.
    std::optional<std::vector<Color>> palette;
    Connectivity connectivity = Connectivity::Four;
    Color background = Color::Black;
};

namespace detail {

// Cells forced equal by the requested symmetry.
// vertical: left-right mirror; horizontal: top-bottom mirror;
// diagonal: transpose; radial: quarter-turn.
inline std::vector<Point> symmetry_orbit(Point p, int w, int h, SpriteSymmetry sym) {
    std::vector<Point> pts{p};
    auto add = [&](Point q) {
        if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
    };
    switch (sym) {
    case SpriteSymmetry::Vertical: add({w - 1 - p.x, p.y}); break;
    case SpriteSymmetry::Horizontal: add({p.x, h - 1 - p.y}); break;
    case SpriteSymmetry::Diagonal: add({p.y, p.x}); break;
    case SpriteSymmetry::Radial: {
        Point q = p;
        for (int i = 0; i < 3; ++i) {
            q = {w - 1 - q.y, q.x};
            add(q);
        }
        break;
    }
    case SpriteSymmetry::NotSymmetric: break;
    }
    return pts;
}

} // namespace detail

/// Contiguous random object of the requested size, density and symmetry.
/// Grows a region cell by cell (keeping symmetry), rejection sampling up to
/// 1000 attempts for contiguity.
inline Sprite random_sprite(const SpriteSpec& spec, Rng& rng) {
    if (spec.widths.empty() || spec.heights.empty()) throw std::invalid_argument("random_sprite: no candidate size");
    if (!(spec.density > 0.0 && spec.density <= 1.0)) throw std::invalid_argument("random_sprite: density outside (0, 1]");
    for (int v : spec.widths)
        if (v < 1) throw std::invalid_argument("random_sprite: non-positive width");
    for (int v : spec.heights)
        if (v < 1) throw std::invalid_argument("random_sprite: non-positive height");

    const SpriteSymmetry sym = spec.symmetry.value_or(static_cast<SpriteSymmetry>(rng.uniform_int(0, 4)));
    int w = rng.pick(spec.widths);
    int h = rng.pick(spec.heights);
    if (sym == SpriteSymmetry::Diagonal || sym == SpriteSymmetry::Radial) {
        std::vector<int> square;
        for (int v : spec.widths)
            if (std::find(spec.heights.begin(), spec.heights.end(), v) != spec.heights.end()) square.push_back(v);
        if (square.empty()) throw std::invalid_argument("random_sprite: diagonal/radial symmetry needs a square size");
        if (w != h) w = h = rng.pick(square);
    }

    std::vector<Color> palette;
    if (spec.palette) {
        for (Color c : *spec.palette)
            if (c != spec.background) palette.push_back(c);
        if (palette.empty()) throw std::invalid_argument("random_sprite: palette has no non-background color");
    } else {
        std::vector<Color> choices;
        for (Color c : kAllColors)
            if (c != spec.background) choices.push_back(c);
        palette.push_back(rng.pick(choices));
    }

    const int target = std::max(1, static_cast<int>(std::ceil(spec.density * w * h)));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Sprite s(w, h, spec.background);
        Mask filled(w, h);
        int count = 0;
        auto place = [&](Point p) {
            const Color c = palette[rng.index(palette.size())];
            for (Point q : detail::symmetry_orbit(p, w, h, sym)) {
                if (filled.at(q.x, q.y)) continue;
                filled.set(q.x, q.y);
                s.set(q.x, q.y, c);
                ++count;
            }
        };
        place({rng.uniform_int(0, w - 1), rng.uniform_int(0, h - 1)});
        while (count < target) {
            std::vector<Point> frontier;
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x) {
                    if (filled.at(x, y)) continue;
                    for (Point d : neighbor_offsets(spec.connectivity))
                        if (filled.in_bounds(x + d.x, y + d.y) && filled.at(x + d.x, y + d.y)) {
                            frontier.push_back({x, y});
                            break;
                        }
                }
            if (frontier.empty()) break;
            place(frontier[rng.index(frontier.size())]);
        }
        if (is_contiguous(s, spec.background, spec.connectivity)) return s;
    }
    throw std::runtime_error("random_sprite: could not produce a contiguous sprite in 1000 attempts");
}

/// `count` increasing positions in [0, max_len) separated by at least one
/// empty cell, with the spare room split at random between the gaps. With
/// `padding`, the first and last cell stay free.
inline std::vector<int> generate_position_has_interval(int max_len, int count, Rng& rng, bool padding = false) {
    if (count < 1) throw std::invalid_argument("generate_position_has_interval: count must be positive");
    const int lo = padding ? 1 : 0;
    const int span = (padding ? max_len - 1 : max_len) - lo;
    const int slack = span - (2 * count - 1);
    if (slack < 0) throw std::invalid_argument("generate_position_has_interval: not enough room");
    std::vector<int> cuts;
    for (int i = 0; i < count; ++i) cuts.push_back(rng.uniform_int(0, slack));
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> out;
    int prev_cut = 0;
    for (int i = 0; i < count; ++i) {
        const int gap = cuts[i] - prev_cut;
        out.push_back(i == 0 ? lo + cuts[0] : out.back() + 2 + gap);
        prev_cut = cuts[i];
    }
    return out;
}

} // namespace arckit::lib
