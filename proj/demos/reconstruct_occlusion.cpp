// Occluded tiling demo: draw a tiled pattern with black patches, find its
// translations, and fill every hidden cell from a visible copy.
//
//   demo_reconstruct [seed] [--svg out.svg]

#include "arckit/eval/render.hpp"
#include "arckit/runtime/seeds.hpp"
#include "arckit/symmetry.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

using namespace arckit;

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    std::string svg_path;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--svg" && i + 1 < argc) svg_path = argv[++i];
        else seed = std::strtoull(a.c_str(), nullptr, 10);
    }

    const auto* tiling = runtime::find_seed("0dfd9992");
    Rng rng(seed);
    const Grid input = tiling->generator(rng);

    const std::vector<Color> ignore{Color::Black};
    const auto syms = symmetry::detect_translational(input, ignore);
    std::cout << "input " << input.width() << "x" << input.height() << ", " << input.count(Color::Black)
              << " hidden cells\n"
              << eval::render_ansi(input) << "\n";
    for (const auto& s : syms) {
        const auto& t = std::get<symmetry::Translation>(s);
        std::cout << "translation (" << t.dx << ", " << t.dy << ")\n";
    }
    if (syms.empty()) {
        std::cerr << "no translational symmetry found\n";
        return 1;
    }

    const Grid output = symmetry::fill_from_orbits(input, ignore, syms);
    std::cout << "\nreconstructed, " << output.count(Color::Black) << " cells still hidden\n"
              << eval::render_ansi(output);

    if (!svg_path.empty()) {
        Task t;
        t.id = "occlusion-" + std::to_string(seed);
        t.train = {{input, output}};
        t.test_inputs = {input};
        eval::write_text_file(svg_path, eval::render_svg(t));
        std::cout << "wrote " << svg_path << "\n";
    }
    return output.contains(Color::Black) ? 1 : 0;
}
