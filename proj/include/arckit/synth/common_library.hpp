#pragma once

#include <string_view>

namespace arckit::synth {

/// Python-facing summary of the grid helper library, embedded in code
/// generation prompts. Grids are indexed [x, y].
inline constexpr std::string_view kCommonLibraryText = R"("""Grid helpers available to puzzle programs. Grids are numpy arrays indexed [x, y]."""

import numpy as np
import random


class Color:
    """
    Color.BLACK, Color.BLUE, Color.RED, Color.GREEN, Color.YELLOW,
    Color.GREY, Color.PINK, Color.ORANGE, Color.TEAL, Color.MAROON

    Color.ALL_COLORS: every color. Color.NOT_BLACK: every color except black.
    Treat colors as labels; only Color.BLACK (0) has a fixed meaning.
    """

def flood_fill(grid, x, y, color, connectivity=4):
    """Recolor, in place, the same-colored region containing (x, y). connectivity is 4 or 8."""

def draw_line(grid, x, y, end_x=None, end_y=None, length=None, direction=None, color=None, stop_at_color=[]):
    """Draw from (x, y) along direction (dx, dy) until the grid edge, end point, length or a stop color."""

def find_connected_components(grid, background=Color.BLACK, connectivity=4, monochromatic=True):
    """List of same-shape grids, each holding one connected non-background component."""

def randomly_scatter_points(grid, color, density=0.5, background=Color.BLACK):
    """Paint a random fraction of the background cells with color."""

def scale_pattern(pattern, scale_factor):
    """Blow every cell up into a scale_factor x scale_factor block."""

def blit_sprite(grid, sprite, x, y, background=Color.BLACK):
    """Copy the non-background cells of sprite onto grid with its corner at (x, y), clipping at the edges."""

def bounding_box(grid, background=Color.BLACK):
    """(x, y, width, height) of the non-background cells."""

def object_position(obj, background=Color.BLACK, anchor="upper left"):
    """Coordinates of an anchor point of the object's bounding box."""

def crop(grid, background=Color.BLACK):
    """The smallest sub-grid holding every non-background cell."""

def translate(obj, x, y, background=Color.BLACK):
    """Shift the contents by (x, y), filling vacated cells with background."""

def collision(object1, object2, x1=0, y1=0, x2=0, y2=0, background=Color.BLACK):
    """True if the two objects, placed at the given offsets, share a non-background cell."""

def contact(object1, object2, x1=0, y1=0, x2=0, y2=0, background=Color.BLACK, connectivity=4):
    """True if the placed objects overlap or touch."""

def object_interior(grid, background=Color.BLACK):
    """Mask of cells that are object cells or enclosed by them (not reachable from the border through background)."""

def object_boundary(grid, background=Color.BLACK):
    """Mask of interior cells that touch the outside."""

def object_neighbors(grid, background=Color.BLACK, connectivity=4):
    """Mask of outside cells adjacent to the object."""

def detect_objects(grid, predicate=None, background=Color.BLACK, monochromatic=False, connectivity=None,
                   allowed_dimensions=None, colors=None, can_overlap=False):
    """Connected objects filtered by size, colors and predicate."""

def random_free_location_for_sprite(grid, sprite, background=Color.BLACK, border_size=0, padding=0, padding_connectivity=8):
    """A random (x, y) where sprite fits over background only; raises ValueError when none exists."""

def random_sprite(n, m, density=0.5, symmetry=None, color_palette=None, connectivity=4, background=Color.BLACK):
    """A connected random sprite of width in n and height in m ("horizontal", "vertical", "diagonal", "radial", "not_symmetric")."""

def detect_translational_symmetry(grid, ignore_colors=[Color.BLACK]):
    """Translations (dx, dy) under which the grid repeats, ignoring the given colors."""

def detect_mirror_symmetry(grid, ignore_colors=[Color.BLACK]):
    """Mirror axes of the grid."""

def detect_rotational_symmetry(grid, ignore_colors=[Color.BLACK]):
    """Quarter-turn rotation center of the grid, or None."""

def orbit(grid, x, y, symmetries):
    """Every cell reachable from (x, y) by the symmetries."""
)";

} // namespace arckit::synth
