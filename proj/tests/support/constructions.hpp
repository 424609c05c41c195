#pragma once

// Procedural grids with known symmetry, shared by unit and acceptance suites.

#include "arckit/core/grid.hpp"
#include "arckit/core/rng.hpp"

namespace construct {

using arckit::Color;
using arckit::Grid;
using arckit::Rng;

inline Color visible_color(Rng& rng) { return static_cast<Color>(rng.uniform_int(1, 9)); }

/// w x h grid tiled by a random tw x th block of non-Black colors.
inline Grid tiling(Rng& rng, int w, int h, int tw, int th) {
    Grid tile(tw, th);
    for (int y = 0; y < th; ++y)
        for (int x = 0; x < tw; ++x) tile.set(x, y, visible_color(rng));
    Grid g(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) g.set(x, y, tile.at(x % tw, y % th));
    return g;
}

/// Random grid made left-right symmetric (and optionally top-bottom too).
inline Grid mirrored(Rng& rng, int w, int h, bool both) {
    Grid g(w, h);
    for (int y = 0; y < (both ? (h + 1) / 2 : h); ++y)
        for (int x = 0; x < (w + 1) / 2; ++x) {
            const Color c = visible_color(rng);
            g.set(x, y, c);
            g.set(w - 1 - x, y, c);
            if (both) {
                g.set(x, h - 1 - y, c);
                g.set(w - 1 - x, h - 1 - y, c);
            }
        }
    return g;
}

/// n x n grid invariant under a quarter turn about its center.
inline Grid rotational(Rng& rng, int n) {
    Grid g(n, n);
    Grid filled(n, n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            if (filled.at(x, y) != Color::Black) continue;
            const Color c = visible_color(rng);
            int px = x, py = y;
            for (int k = 0; k < 4; ++k) {
                g.set(px, py, c);
                filled.set(px, py, Color::Blue);
                const int nx = n - 1 - py, ny = px;
                px = nx;
                py = ny;
            }
        }
    return g;
}

/// Overwrites a random `fraction` of cells with Black.
inline Grid occlude(Rng& rng, const Grid& g, double fraction) {
    Grid out = g;
    for (int y = 0; y < g.height(); ++y)
        for (int x = 0; x < g.width(); ++x)
            if (rng.uniform01() < fraction) out.set(x, y, Color::Black);
    return out;
}

/// Overwrites a random axis-aligned rectangle with Black (the occluder in
/// occluded-tiling puzzles), covering at most `max_fraction` of the grid.
inline Grid occlude_rect(Rng& rng, const Grid& g, double max_fraction) {
    for (;;) {
        const int rw = rng.uniform_int(1, g.width() / 2), rh = rng.uniform_int(1, g.height() / 2);
        if (rw * rh > max_fraction * g.width() * g.height()) continue;
        const int x0 = rng.uniform_int(0, g.width() - rw), y0 = rng.uniform_int(0, g.height() - rh);
        Grid out = g;
        for (int y = y0; y < y0 + rh; ++y)
            for (int x = x0; x < x0 + rw; ++x) out.set(x, y, Color::Black);
        return out;
    }
}

} // namespace construct
