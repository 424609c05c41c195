#pragma once

// Grid pictures: SVG (one rect per cell) and ANSI true-color terminal art.

#include "arckit/core/error.hpp"
#include "arckit/core/task.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace arckit::eval {

struct Rgb {
    int r, g, b;
};

inline constexpr std::array<Rgb, kNumColors> kPalette = {{
    {0x00, 0x00, 0x00},  // Black
    {0x00, 0x74, 0xd9},  // Blue
    {0xff, 0x41, 0x36},  // Red
    {0x2e, 0xcc, 0x40},  // Green
    {0xff, 0xdc, 0x00},  // Yellow
    {0xaa, 0xaa, 0xaa},  // Gray
    {0xf0, 0x12, 0xbe},  // Pink
    {0xff, 0x85, 0x1b},  // Orange
    {0x7f, 0xdb, 0xff},  // Teal
    {0x87, 0x0c, 0x25},  // Brown
}};

inline std::string hex_color(Color c) {
    const auto& p = kPalette[static_cast<std::size_t>(index_of(c))];
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", p.r, p.g, p.b);
    return buf;
}

inline constexpr int kCellPx = 20;

namespace detail {

inline void svg_cells(std::ostringstream& os, const Grid& g, int ox, int oy) {
    for (int y = 0; y < g.height(); ++y)
        for (int x = 0; x < g.width(); ++x)
            os << "<rect x=\"" << ox + x * kCellPx << "\" y=\"" << oy + y * kCellPx << "\" width=\"" << kCellPx
               << "\" height=\"" << kCellPx << "\" fill=\"" << hex_color(g.at(x, y)) << "\"/>\n";
}

inline std::string svg_document(int w, int h, const std::string& body) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << " " << h << "\">\n<g stroke=\"#555555\" stroke-width=\"1\">\n"
       << body << "</g>\n</svg>\n";
    return os.str();
}

} // namespace detail

inline std::string render_svg(const Grid& g) {
    std::ostringstream body;
    detail::svg_cells(body, g, 0, 0);
    return detail::svg_document(g.width() * kCellPx, g.height() * kCellPx, body.str());
}

/// One row per pair (input left, output right), test inputs last.
inline std::string render_svg(const Task& t) {
    constexpr int gap = kCellPx;
    std::ostringstream body;
    int y = 0, width = 0;
    auto row = [&](const Grid& a, const Grid* b) {
        detail::svg_cells(body, a, 0, y);
        int w = a.width() * kCellPx, h = a.height() * kCellPx;
        if (b) {
            detail::svg_cells(body, *b, w + gap, y);
            w += gap + b->width() * kCellPx;
            h = std::max(h, b->height() * kCellPx);
        }
        width = std::max(width, w);
        y += h + gap;
    };
    for (const auto& p : t.train) row(p.input, &p.output);
    for (std::size_t i = 0; i < t.test_inputs.size(); ++i)
        row(t.test_inputs[i], t.test_outputs ? &(*t.test_outputs)[i] : nullptr);
    return detail::svg_document(width, std::max(0, y - gap), body.str());
}

/// Two spaces per cell on a 24-bit background color.
inline std::string render_ansi(const Grid& g) {
    std::string out;
    for (int y = 0; y < g.height(); ++y) {
        for (int x = 0; x < g.width(); ++x) {
            const auto& p = kPalette[static_cast<std::size_t>(index_of(g.at(x, y)))];
            out += "\x1b[48;2;" + std::to_string(p.r) + ";" + std::to_string(p.g) + ";" + std::to_string(p.b) + "m  ";
        }
        out += "\x1b[0m\n";
    }
    return out;
}

inline std::string render_ansi(const Task& t) {
    std::string out;
    auto block = [&](const std::string& title, const Grid& g) { out += title + "\n" + render_ansi(g) + "\n"; };
    for (std::size_t i = 0; i < t.train.size(); ++i) {
        block("train " + std::to_string(i + 1) + " input", t.train[i].input);
        block("train " + std::to_string(i + 1) + " output", t.train[i].output);
    }
    for (std::size_t i = 0; i < t.test_inputs.size(); ++i) {
        block("test " + std::to_string(i + 1) + " input", t.test_inputs[i]);
        if (t.test_outputs) block("test " + std::to_string(i + 1) + " output", (*t.test_outputs)[i]);
    }
    return out;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot write " + path.string());
    f << content;
    if (!f) throw DataError("write failed: " + path.string());
}

} // namespace arckit::eval
