#include <algorithm>
#include <map>
#include <set>

#include "sasm/constructions.hpp"
#include "macro.hpp"

namespace sasm {

namespace {

// One tile of the O(B)-tile string system: east/west glues and the mark on its north side.
struct StringTile {
    std::string west, east, mark;
};

// The string is cut into chunks of w bits. Chunk j is header h_j, one bit tile per position, and
// a trailer whose east glue starts chunk j + 1; each chunk forms in its own bin, then all chunks
// are concatenated in one.
std::vector<std::vector<StringTile>> string_tiles(const std::string& bits, int w) {
    std::vector<std::vector<StringTile>> chunks;
    auto p = [](std::size_t i) { return "p" + std::to_string(i); };
    auto h = [](std::size_t j) { return "h" + std::to_string(j); };
    for (std::size_t start = 0, j = 0; start < bits.size(); start += w, ++j) {
        const std::size_t len = std::min<std::size_t>(w, bits.size() - start);
        auto& chunk = chunks.emplace_back();
        chunk.push_back({h(j), p(0), "bn"});
        for (std::size_t i = 0; i < len; ++i) chunk.push_back({p(i), p(i + 1), bits[start + i] == '1' ? "b1" : "b0"});
        chunk.push_back({p(len), h(j + 1), "bn"});
    }
    return chunks;
}

}  // namespace

StagedSystem gen_crazy_string(const std::string& bits, int bins) {
    if (bins < 4 || bins % 2 != 0) throw ConstructionError(ConstructionErrorKind::InvalidSize, "bin budget must be even and at least 4");
    if (bits.empty() || bits.find_first_not_of("01") != std::string::npos)
        throw ConstructionError(ConstructionErrorKind::InvalidSize, "bits must be a nonempty 0/1 string");
    const int w = bins / 2;
    if (bits.size() > static_cast<std::size_t>(w) * w)
        throw ConstructionError(ConstructionErrorKind::BudgetTooSmall,
                                std::to_string(bits.size()) + " bits need more than " + std::to_string(bins) + " bins");

    const auto chunks = string_tiles(bits, w);
    std::set<std::string> labels;
    for (const auto& c : chunks)
        for (const auto& t : c) labels.insert({t.west, t.east});
    const int r = detail::macro_word_bits(labels.size());
    const int side = detail::macro_side(r);
    std::map<std::string, std::string> word;
    for (const auto& l : labels) word.emplace(l, detail::macro_word(word.size(), r));

    DecompositionTree tree;
    const std::size_t root = tree.add({});
    int x = 0;
    for (const auto& c : chunks) {
        const std::size_t chunk = tree.add({});
        for (const auto& t : c) {
            std::array<std::string, 4> faces;
            faces[static_cast<int>(Side::West)] = word.at(t.west);
            faces[static_cast<int>(Side::East)] = word.at(t.east);
            const std::size_t block = detail::add_macro_block(tree, Coord{x, 0}, faces, r);
            tree.labels[Coord{x + side / 2, side - 1}][static_cast<int>(Side::North)] = t.mark;
            tree.nodes[chunk].children.push_back(block);
            const auto& cells = tree.nodes[block].cells;
            tree.nodes[chunk].cells.insert(tree.nodes[chunk].cells.end(), cells.begin(), cells.end());
            x += side;
        }
        std::sort(tree.nodes[chunk].cells.begin(), tree.nodes[chunk].cells.end());
        tree.nodes[root].children.push_back(chunk);
        const auto& cells = tree.nodes[chunk].cells;
        tree.nodes[root].cells.insert(tree.nodes[root].cells.end(), cells.begin(), cells.end());
    }
    std::sort(tree.nodes[root].cells.begin(), tree.nodes[root].cells.end());
    if (chunks.size() == 1) tree.nodes[root] = tree.nodes[tree.nodes[root].children.front()];
    detail::declare_used_glues(tree);
    return compile_tree(tree, "crazy_string");
}

}  // namespace sasm
