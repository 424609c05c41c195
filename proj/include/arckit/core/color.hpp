#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace arckit {

// Index order is fixed: it is the integer written in ARC JSON files.
enum class Color : std::uint8_t {
    Black = 0,
    Blue = 1,
    Red = 2,
    Green = 3,
    Yellow = 4,
    Gray = 5,
    Pink = 6,
    Orange = 7,
    Teal = 8,
    Brown = 9,
};

inline constexpr int kNumColors = 10;

inline constexpr std::array<std::string_view, kNumColors> kColorNames = {
    "Black", "Blue", "Red", "Green", "Yellow", "Gray", "Pink", "Orange", "Teal", "Brown",
};

inline constexpr std::array<Color, kNumColors> kAllColors = {
    Color::Black, Color::Blue,   Color::Red,    Color::Green, Color::Yellow,
    Color::Gray,  Color::Pink,   Color::Orange, Color::Teal,  Color::Brown,
};

inline constexpr std::array<Color, kNumColors - 1> kNotBlack = {
    Color::Blue, Color::Red,    Color::Green, Color::Yellow, Color::Gray,
    Color::Pink, Color::Orange, Color::Teal,  Color::Brown,
};

constexpr int index_of(Color c) { return static_cast<int>(c); }

constexpr std::optional<Color> color_from_index(int i) {
    if (i < 0 || i >= kNumColors) return std::nullopt;
    return static_cast<Color>(i);
}

constexpr std::string_view color_name(Color c) { return kColorNames[index_of(c)]; }

constexpr std::optional<Color> color_from_name(std::string_view name) {
    for (int i = 0; i < kNumColors; ++i)
        if (kColorNames[i] == name) return static_cast<Color>(i);
    return std::nullopt;
}

} // namespace arckit
