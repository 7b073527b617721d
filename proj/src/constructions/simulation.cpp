#include <algorithm>
#include <map>
#include <set>

#include "sasm/constructions.hpp"
#include "macro.hpp"

namespace sasm {

namespace {

// Each distinct non-null glue of the system gets the word of its index.
std::map<std::string, std::string> glue_words(const TileSystem& system) {
    std::set<std::string> labels;
    for (const auto& t : system.tiles)
        for (const auto& g : t.glues)
            if (g != kNullGlue) labels.insert(g);
    const int bits = detail::macro_word_bits(labels.size());
    std::map<std::string, std::string> words;
    for (const auto& g : labels) words.emplace(g, detail::macro_word(words.size(), bits));
    return words;
}

void check_system(const TileSystem& system) {
    if (system.temperature != 1)
        throw ConstructionError(ConstructionErrorKind::UnsupportedTemperature,
                                "only temperature-1 systems can be simulated");
    for (const auto& t : system.tiles) {
        for (const auto& g : t.glues)
            if (g != kNullGlue && system.glues.strength(g) > 1)
                throw ConstructionError(ConstructionErrorKind::UnsupportedTemperature,
                                        "glue " + g + " has strength above 1");
        for (Side s : {Side::East, Side::North})
            if (t.glue(s) != kNullGlue && t.glue(s) == t.glue(opposite(s)))
                throw ConstructionError(ConstructionErrorKind::InvalidSize,
                                        "tile " + t.id + " bonds to copies of itself without bound");
    }
}

}  // namespace

int macro_block_side(const TileSystem& system) {
    return detail::macro_side(detail::macro_word_bits(glue_words(system).size()));
}

StagedSystem gen_simulation(const TileSystem& system) {
    check_system(system);
    const auto words = glue_words(system);
    const int bits = detail::macro_word_bits(words.size());
    const int side = detail::macro_side(bits);

    DecompositionTree tree;
    const std::size_t root = tree.add({});
    std::vector<Coord> all;
    for (std::size_t i = 0; i < system.tiles.size(); ++i) {
        std::array<std::string, 4> face;
        for (Side s : kSides) {
            const auto& g = system.tiles[i].glue(s);
            if (g != kNullGlue) face[static_cast<int>(s)] = words.at(g);
        }
        // Blocks sit apart so the root's cells are disjoint; the root bin is the one-stage mix.
        const std::size_t block = detail::add_macro_block(tree, Coord{static_cast<int>(i) * 2 * side, 0}, face, bits);
        tree.nodes[root].children.push_back(block);
        all.insert(all.end(), tree.nodes[block].cells.begin(), tree.nodes[block].cells.end());
    }
    std::sort(all.begin(), all.end());
    tree.nodes[root].cells = std::move(all);
    detail::declare_used_glues(tree);
    return compile_tree(tree, "simulation");
}

}  // namespace sasm
