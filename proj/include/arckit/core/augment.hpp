#pragma once

#include "arckit/core/grid.hpp"
#include "arckit/core/rng.hpp"
#include "arckit/core/task.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace arckit {

using ColorPerm = std::array<std::uint8_t, kNumColors>;

inline constexpr ColorPerm identity_perm() {
    ColorPerm p{};
    for (int i = 0; i < kNumColors; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

inline bool is_bijection(const ColorPerm& p) {
    std::array<bool, kNumColors> seen{};
    for (auto v : p) {
        if (v >= kNumColors || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline ColorPerm invert_perm(const ColorPerm& p) {
    ColorPerm inv{};
    for (int i = 0; i < kNumColors; ++i) inv[p[i]] = static_cast<std::uint8_t>(i);
    return inv;
}

/// (a then b): result[i] = b[a[i]].
inline ColorPerm compose_perm(const ColorPerm& a, const ColorPerm& b) {
    ColorPerm r{};
    for (int i = 0; i < kNumColors; ++i) r[i] = b[a[i]];
    return r;
}

/// Uniform permutation; colors listed in `fixed` map to themselves.
inline ColorPerm random_perm(Rng& rng, std::span<const Color> fixed = {}) {
    ColorPerm p = identity_perm();
    std::vector<std::uint8_t> free;
    for (int i = 0; i < kNumColors; ++i) {
        bool is_fixed = false;
        for (Color c : fixed) is_fixed = is_fixed || index_of(c) == i;
        if (!is_fixed) free.push_back(static_cast<std::uint8_t>(i));
    }
    std::vector<std::uint8_t> image = free;
    rng.shuffle(image);
    for (std::size_t i = 0; i < free.size(); ++i) p[free[i]] = image[i];
    return p;
}

struct Augmentation {
    enum class Kind { Transpose, ColorPermute };

    Kind kind = Kind::Transpose;
    ColorPerm perm = identity_perm();

    static Augmentation transpose() { return {Kind::Transpose, identity_perm()}; }

    static Augmentation color_permute(const ColorPerm& p) {
        if (!is_bijection(p)) throw std::invalid_argument("color permutation is not a bijection on 0-9");
        return {Kind::ColorPermute, p};
    }

    Augmentation inverse() const {
        if (kind == Kind::Transpose) return *this;
        return {Kind::ColorPermute, invert_perm(perm)};
    }

    std::string describe() const {
        if (kind == Kind::Transpose) return "transpose";
        std::string s = "perm:";
        for (auto v : perm) s.push_back(static_cast<char>('0' + v));
        return s;
    }

    friend bool operator==(const Augmentation&, const Augmentation&) = default;
};

inline Grid apply_augmentation(const Augmentation& a, const Grid& g) {
    if (a.kind == Augmentation::Kind::Transpose) {
        Grid out(g.height(), g.width());
        for (int y = 0; y < g.height(); ++y)
            for (int x = 0; x < g.width(); ++x) out.set(y, x, g.at(x, y));
        return out;
    }
    Grid out = g;
    for (int y = 0; y < g.height(); ++y)
        for (int x = 0; x < g.width(); ++x) out.set(x, y, static_cast<Color>(a.perm[index_of(g.at(x, y))]));
    return out;
}

/// Composition applied left to right.
using AugmentationSet = std::vector<Augmentation>;

inline AugmentationSet invert(const AugmentationSet& set) {
    AugmentationSet inv;
    for (auto it = set.rbegin(); it != set.rend(); ++it) inv.push_back(it->inverse());
    return inv;
}

inline Grid apply_augmentations(const AugmentationSet& set, Grid g) {
    for (const auto& a : set) g = apply_augmentation(a, g);
    return g;
}

inline std::string describe(const AugmentationSet& set) {
    if (set.empty()) return "identity";
    std::string s;
    for (const auto& a : set) {
        if (!s.empty()) s += "+";
        s += a.describe();
    }
    return s;
}

inline Task apply_augmentations(const AugmentationSet& set, const Task& t) {
    Task out;
    out.id = t.id;
    for (const auto& p : t.train) out.train.push_back({apply_augmentations(set, p.input), apply_augmentations(set, p.output)});
    for (const auto& g : t.test_inputs) out.test_inputs.push_back(apply_augmentations(set, g));
    if (t.test_outputs) {
        std::vector<Grid> outs;
        for (const auto& g : *t.test_outputs) outs.push_back(apply_augmentations(set, g));
        out.test_outputs = std::move(outs);
    }
    return out;
}

} // namespace arckit
