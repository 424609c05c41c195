#pragma once

// Bundled seed programs: hand-written transform/generator pairs for a
// representative subset of ARC training tasks, each with the Python-style
// source text used when building prompts and fine-tuning targets.

#include "arckit/lib/sprites.hpp"
#include "arckit/runtime/program.hpp"
#include "arckit/symmetry.hpp"

#include <map>
#include <string>
#include <vector>

namespace arckit::runtime {

struct SeedProgram {
    std::string id;
    std::vector<std::string> concepts;
    std::string description;
    TransformFn transform;
    GeneratorFn generator;
    std::string source_text;
    /// Colors the transform treats specially; the color-symmetry filter only
    /// permutes colors outside this set.
    std::optional<std::vector<Color>> palette;

    std::string registry_key() const { return "seed:" + id; }

    CandidateProgram candidate() const {
        return CandidateProgram::from_native(registry_key(), {transform, generator}, source_text);
    }
};

namespace seeds_detail {

using namespace arckit::lib;

inline Grid random_fill(Rng& rng, int w, int h, const std::vector<Color>& colors) {
    Grid g(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) g.set(x, y, rng.pick(colors));
    return g;
}

inline std::vector<Color> random_colors(Rng& rng, int n, bool allow_black = true) {
    std::vector<Color> pool(kAllColors.begin() + (allow_black ? 0 : 1), kAllColors.end());
    rng.shuffle(pool);
    pool.resize(static_cast<std::size_t>(n));
    return pool;
}

inline Grid rotate180(const Grid& g) {
    Grid out(g.width(), g.height());
    for (int y = 0; y < g.height(); ++y)
        for (int x = 0; x < g.width(); ++x) out.set(g.width() - 1 - x, g.height() - 1 - y, g.at(x, y));
    return out;
}

inline Grid flip_lr(const Grid& g) {
    Grid out(g.width(), g.height());
    for (int y = 0; y < g.height(); ++y)
        for (int x = 0; x < g.width(); ++x) out.set(g.width() - 1 - x, y, g.at(x, y));
    return out;
}

inline Grid transpose(const Grid& g) {
    Grid out(g.height(), g.width());
    for (int y = 0; y < g.height(); ++y)
        for (int x = 0; x < g.width(); ++x) out.set(y, x, g.at(x, y));
    return out;
}

// ---- 0d3d703e ----
inline const std::map<Color, Color>& color_table() {
    static const std::map<Color, Color> table = {
        {Color::Green, Color::Yellow}, {Color::Blue, Color::Gray}, {Color::Red, Color::Pink},
        {Color::Teal, Color::Brown},   {Color::Yellow, Color::Green}, {Color::Gray, Color::Blue},
        {Color::Pink, Color::Red},     {Color::Brown, Color::Teal},
    };
    return table;
}

inline SeedProgram color_mapping() {
    SeedProgram s;
    s.id = "0d3d703e";
    s.concepts = {"color mapping"};
    s.description =
        "The input is a small grid whose columns are each a single color. To make the output, recolor every cell "
        "using a fixed lookup: green and yellow swap, blue and gray swap, red and pink swap, teal and maroon swap.";
    s.palette = std::vector<Color>{Color::Green, Color::Yellow, Color::Blue, Color::Gray,
                                   Color::Red,   Color::Pink,   Color::Teal, Color::Brown};
    s.transform = [](const Grid& in) {
        Grid out = in;
        for (int y = 0; y < in.height(); ++y)
            for (int x = 0; x < in.width(); ++x) {
                auto it = color_table().find(in.at(x, y));
                if (it != color_table().end()) out.set(x, y, it->second);
            }
        return out;
    };
    s.generator = [](Rng& rng) {
        std::vector<Color> keys;
        for (auto [k, v] : color_table()) keys.push_back(k);
        Grid g(3, 3);
        for (int x = 0; x < 3; ++x) {
            const Color c = rng.pick(keys);
            for (int y = 0; y < 3; ++y) g.set(x, y, c);
        }
        return g;
    };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# color mapping

# description:
# The input is a small grid whose columns are each a single color. To make the output, recolor every cell
# using a fixed lookup: green and yellow swap, blue and gray swap, red and pink swap, teal and maroon swap.

SWAPS = {
    Color.GREEN: Color.YELLOW, Color.YELLOW: Color.GREEN,
    Color.BLUE: Color.GREY, Color.GREY: Color.BLUE,
    Color.RED: Color.PINK, Color.PINK: Color.RED,
    Color.TEAL: Color.MAROON, Color.MAROON: Color.TEAL,
}

def transform_grid(input_grid):
    output_grid = input_grid.copy()
    for x in range(input_grid.shape[0]):
        for y in range(input_grid.shape[1]):
            output_grid[x, y] = SWAPS.get(input_grid[x, y], input_grid[x, y])
    return output_grid

def generate_input():
    grid = np.zeros((3, 3), dtype=int)
    for x in range(3):
        grid[x, :] = random.choice(list(SWAPS.keys()))
    return grid
)";
    return s;
}

// ---- 1b2d62fb ----
inline SeedProgram nor_bitmask() {
    SeedProgram s;
    s.id = "1b2d62fb";
    s.concepts = {"boolean logical operations", "bitmasks with separator"};
    s.description =
        "The input holds two maroon bitmasks of equal size side by side, split by a single blue column. To make "
        "the output, mark in teal every position that is empty in both masks (logical NOR); everything else is "
        "black.";
    s.palette = std::vector<Color>{Color::Brown, Color::Blue, Color::Teal};
    s.transform = [](const Grid& in) {
        int bar = -1;
        for (int x = 0; x < in.width() && bar < 0; ++x) {
            bool all_blue = true;
            for (int y = 0; y < in.height(); ++y) all_blue = all_blue && in.at(x, y) == Color::Blue;
            if (all_blue) bar = x;
        }
        if (bar <= 0 || 2 * bar + 1 != in.width()) throw std::runtime_error("no centered blue separator column");
        Grid out(bar, in.height());
        for (int y = 0; y < in.height(); ++y)
            for (int x = 0; x < bar; ++x)
                if (in.at(x, y) != Color::Brown && in.at(bar + 1 + x, y) != Color::Brown) out.set(x, y, Color::Teal);
        return out;
    };
    s.generator = [](Rng& rng) {
        const int w = rng.uniform_int(2, 9), h = rng.uniform_int(2, 9);
        Grid g(2 * w + 1, h);
        for (int y = 0; y < h; ++y) {
            g.set(w, y, Color::Blue);
            for (int x = 0; x < w; ++x) {
                if (rng.bernoulli(0.5)) g.set(x, y, Color::Brown);
                if (rng.bernoulli(0.5)) g.set(w + 1 + x, y, Color::Brown);
            }
        }
        return g;
    };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# boolean logical operations, bitmasks with separator

# description:
# The input holds two maroon bitmasks of equal size side by side, split by a single blue column. To make
# the output, mark in teal every position that is empty in both masks (logical NOR); everything else is
# black.

def transform_grid(input_grid):
    width, height = input_grid.shape
    bar = next(x for x in range(width) if np.all(input_grid[x, :] == Color.BLUE))
    left, right = input_grid[:bar, :], input_grid[bar + 1:, :]
    output_grid = np.full(left.shape, Color.BLACK)
    output_grid[(left != Color.MAROON) & (right != Color.MAROON)] = Color.TEAL
    return output_grid

def generate_input():
    width, height = np.random.randint(2, 10), np.random.randint(2, 10)
    masks = [np.random.choice([Color.MAROON, Color.BLACK], size=(width, height)) for _ in range(2)]
    bar = np.full((1, height), Color.BLUE)
    return np.concatenate((masks[0], bar, masks[1]), axis=0)
)";
    return s;
}

// ---- 0dfd9992 ----
inline SeedProgram occluded_tiling() {
    SeedProgram s;
    s.id = "0dfd9992";
    s.concepts = {"occlusion", "translational symmetry"};
    s.description =
        "The input is a pattern that repeats by translation, with some rectangular patches blacked out. To make "
        "the output, recover the hidden cells from the repetitions of the pattern and remove every black patch.";
    s.transform = [](const Grid& in) {
        const std::vector<Color> ignore{Color::Black};
        auto syms = symmetry::detect_translational(in, ignore);
        if (syms.empty()) throw std::runtime_error("no translational symmetry found");
        Grid out = symmetry::fill_from_orbits(in, ignore, syms);
        if (out.contains(Color::Black)) throw std::runtime_error("an occluded cell has no visible copy");
        return out;
    };
    s.generator = [transform = s.transform](Rng& rng) {
        for (;;) {
            const int w = rng.uniform_int(15, 30), h = rng.uniform_int(15, 30);
            const int tw = rng.uniform_int(3, 8), th = rng.uniform_int(3, 8);
            SpriteSpec spec;
            spec.widths = {tw};
            spec.heights = {th};
            spec.density = 1.0;
            spec.symmetry = SpriteSymmetry::NotSymmetric;
            spec.palette = std::vector<Color>(kNotBlack.begin(), kNotBlack.end());
            const Sprite tile = random_sprite(spec, rng);
            Grid pattern(w, h);
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x) pattern.set(x, y, tile.at(x % tw, y % th));
            Grid occluded = pattern;
            const int patches = rng.uniform_int(1, 5);
            for (int i = 0; i < patches; ++i) {
                const int px = rng.uniform_int(0, w - 1), py = rng.uniform_int(0, h - 1);
                const int pw = rng.uniform_int(3, 7), ph = rng.uniform_int(3, 7);
                for (int y = py; y < std::min(h, py + ph); ++y)
                    for (int x = px; x < std::min(w, px + pw); ++x) occluded.set(x, y, Color::Black);
            }
            // Keep only instances whose occlusion is recoverable.
            try {
                if (transform(occluded) == pattern) return occluded;
            } catch (const std::exception&) {
            }
        }
    };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# occlusion, translational symmetry

# description:
# The input is a pattern that repeats by translation, with some rectangular patches blacked out. To make
# the output, recover the hidden cells from the repetitions of the pattern and remove every black patch.

def transform_grid(input_grid):
    symmetries = detect_translational_symmetry(input_grid, ignore_colors=[Color.BLACK])
    assert symmetries, "pattern does not repeat"
    output_grid = input_grid.copy()
    for x, y in np.argwhere(input_grid == Color.BLACK):
        visible = {input_grid[ox, oy] for ox, oy in orbit(input_grid, x, y, symmetries)} - {Color.BLACK}
        assert len(visible) == 1, "hidden cell is ambiguous"
        output_grid[x, y] = visible.pop()
    return output_grid

def generate_input():
    width, height = np.random.randint(15, 31), np.random.randint(15, 31)
    tile = random_sprite(random.randint(3, 8), random.randint(3, 8), density=1, color_palette=Color.NOT_BLACK)
    grid = np.zeros((width, height), dtype=int)
    for x in range(0, width, tile.shape[0]):
        for y in range(0, height, tile.shape[1]):
            blit_sprite(grid, tile, x, y)
    for _ in range(random.randint(1, 5)):
        px, py = random.randint(0, width - 1), random.randint(0, height - 1)
        pw, ph = random.randint(3, 7), random.randint(3, 7)
        grid[px:px + pw, py:py + ph] = Color.BLACK
    return grid
)";
    return s;
}

// ---- 3c9b0459 ----
inline SeedProgram rotate_half_turn() {
    SeedProgram s;
    s.id = "3c9b0459";
    s.concepts = {"rotation", "geometric transformation"};
    s.description = "The input is a small multicolored grid. To make the output, turn the whole grid by 180 degrees.";
    s.transform = rotate180;
    s.generator = [](Rng& rng) { return random_fill(rng, 3, 3, random_colors(rng, rng.uniform_int(2, 4))); };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# rotation, geometric transformation

# description:
# The input is a small multicolored grid. To make the output, turn the whole grid by 180 degrees.

def transform_grid(input_grid):
    return np.rot90(input_grid, 2)

def generate_input():
    colors = random.sample(list(Color.ALL_COLORS), random.randint(2, 4))
    return np.random.choice(colors, size=(3, 3))
)";
    return s;
}

// ---- 74dd1130 ----
inline SeedProgram transpose_seed() {
    SeedProgram s;
    s.id = "74dd1130";
    s.concepts = {"reflection", "diagonal symmetry"};
    s.description = "The input is a small multicolored square grid. To make the output, reflect it across its main "
                    "diagonal, so rows become columns.";
    s.transform = transpose;
    s.generator = [](Rng& rng) { return random_fill(rng, 3, 3, random_colors(rng, 3, false)); };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# reflection, diagonal symmetry

# description:
# The input is a small multicolored square grid. To make the output, reflect it across its main
# diagonal, so rows become columns.

def transform_grid(input_grid):
    return input_grid.T.copy()

def generate_input():
    colors = random.sample(list(Color.NOT_BLACK), 3)
    return np.random.choice(colors, size=(3, 3))
)";
    return s;
}

// ---- 67a3c6ac ----
inline SeedProgram mirror_left_right() {
    SeedProgram s;
    s.id = "67a3c6ac";
    s.concepts = {"reflection", "mirror"};
    s.description = "The input is a square grid of colored cells. To make the output, mirror the grid left to right.";
    s.transform = flip_lr;
    s.generator = [](Rng& rng) {
        const int n = rng.uniform_int(3, 7);
        return random_fill(rng, n, n, random_colors(rng, 4, false));
    };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# reflection, mirror

# description:
# The input is a square grid of colored cells. To make the output, mirror the grid left to right.

def transform_grid(input_grid):
    return input_grid[::-1, :].copy()

def generate_input():
    n = np.random.randint(3, 8)
    colors = random.sample(list(Color.NOT_BLACK), 4)
    return np.random.choice(colors, size=(n, n))
)";
    return s;
}

// ---- a416b8f3 ----
inline SeedProgram duplicate_side_by_side() {
    SeedProgram s;
    s.id = "a416b8f3";
    s.concepts = {"repetition", "concatenation"};
    s.description = "The input is a small picture on a black background. To make the output, place a second copy "
                    "of the picture directly to the right of the first.";
    s.transform = [](const Grid& in) {
        Grid out(2 * in.width(), in.height());
        out = blit(out, in, 0, 0, std::nullopt);
        return blit(out, in, in.width(), 0, std::nullopt);
    };
    s.generator = [](Rng& rng) {
        const int w = rng.uniform_int(2, 6), h = rng.uniform_int(2, 6);
        Grid g(w, h);
        const auto colors = random_colors(rng, 2, false);
        g = scatter_points(g, colors[0], 0.4, rng);
        g = scatter_points(g, colors[1], 0.2, rng);
        if (!bounding_box(g)) g.set(0, 0, colors[0]);
        return g;
    };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# repetition, concatenation

# description:
# The input is a small picture on a black background. To make the output, place a second copy
# of the picture directly to the right of the first.

def transform_grid(input_grid):
    return np.concatenate((input_grid, input_grid), axis=0)

def generate_input():
    width, height = np.random.randint(2, 7), np.random.randint(2, 7)
    grid = np.zeros((width, height), dtype=int)
    first, second = random.sample(list(Color.NOT_BLACK), 2)
    randomly_scatter_points(grid, color=first, density=0.4)
    randomly_scatter_points(grid, color=second, density=0.2)
    if np.all(grid == Color.BLACK):
        grid[0, 0] = first
    return grid
)";
    return s;
}

// ---- c8f0f002 ----
inline SeedProgram orange_to_gray() {
    SeedProgram s;
    s.id = "c8f0f002";
    s.concepts = {"color replacement"};
    s.description = "The input is a grid of blue, teal and orange cells. To make the output, repaint every orange "
                    "cell gray and leave the rest alone.";
    s.palette = std::vector<Color>{Color::Orange, Color::Gray};
    s.transform = [](const Grid& in) {
        Grid out = in;
        for (int y = 0; y < in.height(); ++y)
            for (int x = 0; x < in.width(); ++x)
                if (in.at(x, y) == Color::Orange) out.set(x, y, Color::Gray);
        return out;
    };
    s.generator = [](Rng& rng) {
        const int w = rng.uniform_int(3, 6), h = rng.uniform_int(3, 6);
        Grid g = random_fill(rng, w, h, {Color::Blue, Color::Teal, Color::Orange});
        g.set(rng.uniform_int(0, w - 1), rng.uniform_int(0, h - 1), Color::Orange);
        return g;
    };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# color replacement

# description:
# The input is a grid of blue, teal and orange cells. To make the output, repaint every orange
# cell gray and leave the rest alone.

def transform_grid(input_grid):
    output_grid = input_grid.copy()
    output_grid[input_grid == Color.ORANGE] = Color.GREY
    return output_grid

def generate_input():
    width, height = np.random.randint(3, 7), np.random.randint(3, 7)
    grid = np.random.choice([Color.BLUE, Color.TEAL, Color.ORANGE], size=(width, height))
    grid[np.random.randint(width), np.random.randint(height)] = Color.ORANGE
    return grid
)";
    return s;
}

// ---- 9172f3a0 ----
inline SeedProgram upscale_three() {
    SeedProgram s;
    s.id = "9172f3a0";
    s.concepts = {"scaling"};
    s.description = "The input is a 3x3 grid. To make the output, enlarge it three times, so every cell becomes a "
                    "3x3 block of the same color.";
    s.transform = [](const Grid& in) { return scale_pattern(in, 3); };
    s.generator = [](Rng& rng) {
        auto colors = random_colors(rng, 2, false);
        colors.push_back(Color::Black);
        return random_fill(rng, 3, 3, colors);
    };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# scaling

# description:
# The input is a 3x3 grid. To make the output, enlarge it three times, so every cell becomes a
# 3x3 block of the same color.

def transform_grid(input_grid):
    return scale_pattern(input_grid, scale_factor=3)

def generate_input():
    colors = random.sample(list(Color.NOT_BLACK), 2) + [Color.BLACK]
    return np.random.choice(colors, size=(3, 3))
)";
    return s;
}

// ---- 00d62c1b ----
inline SeedProgram fill_enclosed() {
    SeedProgram s;
    s.id = "00d62c1b";
    s.concepts = {"topology", "enclosure", "filling"};
    s.description = "The input has green lines on black, some of which close off pockets of black. To make the "
                    "output, paint yellow every black cell that cannot reach the border of the grid without crossing "
                    "green.";
    s.palette = std::vector<Color>{Color::Green, Color::Yellow};
    s.transform = [](const Grid& in) {
        Mask inside = object_interior(in, Color::Black, Connectivity::Four);
        Grid out = in;
        for (int y = 0; y < in.height(); ++y)
            for (int x = 0; x < in.width(); ++x)
                if (inside.at(x, y) && in.at(x, y) == Color::Black) out.set(x, y, Color::Yellow);
        return out;
    };
    s.generator = [](Rng& rng) {
        for (;;) {
            const int w = rng.uniform_int(6, 14), h = rng.uniform_int(6, 14);
            Grid g(w, h);
            const int loops = rng.uniform_int(1, 3);
            for (int i = 0; i < loops; ++i) {
                const int lw = rng.uniform_int(3, std::min(6, w)), lh = rng.uniform_int(3, std::min(6, h));
                const int x0 = rng.uniform_int(0, w - lw), y0 = rng.uniform_int(0, h - lh);
                for (int x = x0; x < x0 + lw; ++x) {
                    g.set(x, y0, Color::Green);
                    g.set(x, y0 + lh - 1, Color::Green);
                }
                for (int y = y0; y < y0 + lh; ++y) {
                    g.set(x0, y, Color::Green);
                    g.set(x0 + lw - 1, y, Color::Green);
                }
            }
            g = scatter_points(g, Color::Green, 0.05, rng);
            Mask inside = object_interior(g, Color::Black, Connectivity::Four);
            bool pocket = false;
            for (int y = 0; y < h && !pocket; ++y)
                for (int x = 0; x < w && !pocket; ++x) pocket = inside.at(x, y) && g.at(x, y) == Color::Black;
            if (pocket) return g;
        }
    };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# topology, enclosure, filling

# description:
# The input has green lines on black, some of which close off pockets of black. To make the
# output, paint yellow every black cell that cannot reach the border of the grid without crossing
# green.

def transform_grid(input_grid):
    enclosed = object_interior(input_grid, background=Color.BLACK)
    output_grid = input_grid.copy()
    output_grid[enclosed & (input_grid == Color.BLACK)] = Color.YELLOW
    return output_grid

def generate_input():
    while True:
        width, height = np.random.randint(6, 15), np.random.randint(6, 15)
        grid = np.zeros((width, height), dtype=int)
        for _ in range(random.randint(1, 3)):
            lw, lh = random.randint(3, min(6, width)), random.randint(3, min(6, height))
            x, y = random.randint(0, width - lw), random.randint(0, height - lh)
            grid[x:x + lw, [y, y + lh - 1]] = Color.GREEN
            grid[[x, x + lw - 1], y:y + lh] = Color.GREEN
        randomly_scatter_points(grid, color=Color.GREEN, density=0.05)
        if np.any(object_interior(grid) & (grid == Color.BLACK)):
            return grid
)";
    return s;
}

// ---- 1cf80156 ----
inline SeedProgram crop_object() {
    SeedProgram s;
    s.id = "1cf80156";
    s.concepts = {"cropping", "object extraction"};
    s.description = "The input shows a single colored shape somewhere on a black canvas. To make the output, cut "
                    "out the smallest rectangle that contains the shape.";
    s.transform = [](const Grid& in) { return crop(in, Color::Black); };
    s.generator = [](Rng& rng) {
        const int w = rng.uniform_int(8, 12), h = rng.uniform_int(8, 12);
        SpriteSpec spec;
        spec.widths = {2, 3, 4};
        spec.heights = {2, 3, 4};
        spec.density = 0.6;
        const Sprite shape = random_sprite(spec, rng);
        Grid g(w, h);
        const Point p = random_free_location(g, shape, rng);
        return blit(g, shape, p.x, p.y);
    };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# cropping, object extraction

# description:
# The input shows a single colored shape somewhere on a black canvas. To make the output, cut
# out the smallest rectangle that contains the shape.

def transform_grid(input_grid):
    return crop(input_grid, background=Color.BLACK)

def generate_input():
    grid = np.zeros((np.random.randint(8, 13), np.random.randint(8, 13)), dtype=int)
    shape = random_sprite([2, 3, 4], [2, 3, 4], density=0.6)
    x, y = random_free_location_for_sprite(grid, shape)
    blit_sprite(grid, shape, x, y)
    return grid
)";
    return s;
}

// ---- 4258a5f9 ----
inline SeedProgram ring_around_gray() {
    SeedProgram s;
    s.id = "4258a5f9";
    s.concepts = {"surrounding", "neighborhood"};
    s.description = "The input has a few isolated gray cells on black. To make the output, draw a blue ring in the "
                    "eight cells around each gray cell.";
    s.palette = std::vector<Color>{Color::Gray, Color::Blue};
    s.transform = [](const Grid& in) {
        Grid out = in;
        for (int y = 0; y < in.height(); ++y)
            for (int x = 0; x < in.width(); ++x) {
                if (in.at(x, y) != Color::Gray) continue;
                for (Point d : neighbor_offsets(Connectivity::Eight))
                    if (in.in_bounds(x + d.x, y + d.y) && in.at(x + d.x, y + d.y) == Color::Black)
                        out.set(x + d.x, y + d.y, Color::Blue);
            }
        return out;
    };
    s.generator = [](Rng& rng) {
        Grid g(9, 9);
        const int n = rng.uniform_int(2, 4);
        PlacementOptions opt;
        opt.padding = 2;
        for (int i = 0; i < n; ++i) {
            try {
                const Point p = random_free_location(g, Sprite(1, 1, Color::Gray), rng, opt);
                g.set(p.x, p.y, Color::Gray);
            } catch (const NoPlacementError&) {
                break;
            }
        }
        return g;
    };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# surrounding, neighborhood

# description:
# The input has a few isolated gray cells on black. To make the output, draw a blue ring in the
# eight cells around each gray cell.

def transform_grid(input_grid):
    output_grid = input_grid.copy()
    for x, y in np.argwhere(input_grid == Color.GREY):
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                nx, ny = x + dx, y + dy
                if 0 <= nx < input_grid.shape[0] and 0 <= ny < input_grid.shape[1] and input_grid[nx, ny] == Color.BLACK:
                    output_grid[nx, ny] = Color.BLUE
    return output_grid

def generate_input():
    grid = np.zeros((9, 9), dtype=int)
    dot = np.full((1, 1), Color.GREY)
    for _ in range(random.randint(2, 4)):
        try:
            x, y = random_free_location_for_sprite(grid, dot, padding=2)
        except ValueError:
            break
        grid[x, y] = Color.GREY
    return grid
)";
    return s;
}

// ---- 25ff71a9 ----
inline SeedProgram shift_down() {
    SeedProgram s;
    s.id = "25ff71a9";
    s.concepts = {"translation", "gravity"};
    s.description = "The input has one colored shape that does not touch the bottom edge. To make the output, move "
                    "the shape down by exactly one cell.";
    s.transform = [](const Grid& in) {
        for (int x = 0; x < in.width(); ++x)
            if (in.at(x, in.height() - 1) != Color::Black) throw std::runtime_error("shape already touches the bottom");
        return translate(in, 0, 1, Color::Black);
    };
    s.generator = [](Rng& rng) {
        const int w = rng.uniform_int(3, 6), h = rng.uniform_int(3, 6);
        SpriteSpec spec;
        spec.widths = {1, 2, 3};
        spec.heights = {1, 2};
        spec.density = 0.7;
        const Sprite shape = random_sprite(spec, rng);
        Grid g(w, h);
        const int x = rng.uniform_int(0, w - shape.width());
        const int y = rng.uniform_int(0, h - 1 - shape.height());
        return blit(g, shape, x, y);
    };
    s.source_text = R"(from common import *

import numpy as np
from typing import *

# concepts:
# translation, gravity

# description:
# The input has one colored shape that does not touch the bottom edge. To make the output, move
# the shape down by exactly one cell.

def transform_grid(input_grid):
    assert np.all(input_grid[:, -1] == Color.BLACK)
    return translate(input_grid, 0, 1, background=Color.BLACK)

def generate_input():
    width, height = np.random.randint(3, 7), np.random.randint(3, 7)
    grid = np.zeros((width, height), dtype=int)
    shape = random_sprite([1, 2, 3], [1, 2], density=0.7)
    x = random.randint(0, width - shape.shape[0])
    y = random.randint(0, height - 1 - shape.shape[1])
    blit_sprite(grid, shape, x, y)
    return grid
)";
    return s;
}

} // namespace seeds_detail

/// The bundled seed corpus, in a fixed order.
inline const std::vector<SeedProgram>& bundled_seeds() {
    static const std::vector<SeedProgram> seeds = [] {
        using namespace seeds_detail;
        std::vector<SeedProgram> v{color_mapping(),    nor_bitmask(),       occluded_tiling(),
                                   rotate_half_turn(), transpose_seed(),    mirror_left_right(),
                                   duplicate_side_by_side(), orange_to_gray(), upscale_three(),
                                   fill_enclosed(),    crop_object(),       ring_around_gray(),
                                   shift_down()};
        for (const auto& s : v) Registry::instance().add(s.registry_key(), {s.transform, s.generator});
        return v;
    }();
    return seeds;
}

inline const SeedProgram* find_seed(std::string_view id) {
    for (const auto& s : bundled_seeds())
        if (s.id == id) return &s;
    return nullptr;
}

} // namespace arckit::runtime
