#pragma once

// Hand-built one-stage temperature-1 systems whose assemblies are fully connected.

#include <string>
#include <utility>
#include <vector>

#include "sasm/constructions.hpp"
#include "sasm/staged.hpp"

namespace cases {

// Glue per side in N E S W order; "" for null.
inline sasm::Tile tile(std::string id, std::string n, std::string e, std::string s, std::string w) {
    auto g = [](std::string v) { return v.empty() ? std::string(sasm::kNullGlue) : v; };
    return sasm::Tile{std::move(id), {g(n), g(e), g(s), g(w)}};
}

inline sasm::TileSystem tile_system(std::vector<sasm::Tile> tiles) {
    sasm::TileSystem t;
    t.tiles = std::move(tiles);
    for (const auto& tl : t.tiles)
        for (const auto& g : tl.glues)
            if (g != sasm::kNullGlue && !t.glues.contains(g)) t.glues.declare(g, 1);
    return t;
}

// Every tile gets its own glue on each side towards a neighbour in a w x h rectangle.
inline sasm::TileSystem rectangle_system(int w, int h) {
    std::vector<sasm::Tile> tiles;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            auto v = [](int x0, int y0) { return "v" + std::to_string(x0) + "_" + std::to_string(y0); };
            auto hz = [](int x0, int y0) { return "h" + std::to_string(x0) + "_" + std::to_string(y0); };
            tiles.push_back(tile("r" + std::to_string(x) + "_" + std::to_string(y), y + 1 < h ? v(x, y) : "",
                                 x + 1 < w ? hz(x, y) : "", y > 0 ? v(x, y - 1) : "", x > 0 ? hz(x - 1, y) : ""));
        }
    return tile_system(std::move(tiles));
}

inline std::vector<std::pair<std::string, sasm::TileSystem>> simulation_systems() {
    return {
        {"domino", rectangle_system(2, 1)},
        {"line3", rectangle_system(3, 1)},
        {"square2", rectangle_system(2, 2)},
        {"plus", tile_system({tile("c", "n", "e", "s", "w"), tile("up", "", "", "n", ""), tile("right", "", "", "", "e"),
                              tile("down", "s", "", "", ""), tile("left", "", "w", "", "")})},
        {"rect3x2", rectangle_system(3, 2)},
    };
}

// The system itself as a single bin.
inline sasm::StagedSystem one_stage(const sasm::TileSystem& t) {
    sasm::StagedSystem s;
    s.name = "one_stage";
    s.temperature = t.temperature;
    s.glues = t.glues;
    s.tiles = t.tiles;
    sasm::BinDecl bin;
    bin.name = "all";
    for (const auto& tl : t.tiles) bin.add.push_back(tl.id);
    s.stages = {{bin}};
    s.output = {sasm::BinRef{1, "all"}};
    return s;
}

}  // namespace cases
