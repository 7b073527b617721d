#pragma once

// Macro glues: faces of square blocks whose tabs and pockets spell a bit string, so that only a
// face with the same word on the opposite side can lock in and bond.
//
// Along a face of a block of side L = 2r + 6 the cells are: corner, two cap cells, two cells per
// bit, two cap cells, corner. East and north faces are positive, west and south faces mate with
// them. A positive bit b has a tab at slot b and a pocket at slot 1 - b; the mating face is the
// complement. The low cap carries the only bonding glue: tab tips on the positive face, pocket
// bottoms on the mating face. The high cap is reversed (tabs on the mating face) and blocks
// shifted placements. North and south faces run right to left.

#include <array>
#include <string>

#include "split.hpp"

namespace sasm::detail {

/// Bits per word for `count` distinct words.
int macro_word_bits(std::size_t count);
int macro_side(int bits);
std::string macro_word(std::size_t index, int bits);

struct MacroGlues {
    std::string lock = "m";  // the glue between locked faces
    std::array<std::string, 2> tree{"g0", "g1"};
};

/// Cells of a block at the origin with the given face words (indexed by Side; empty = flat).
CellSet macro_cells(const std::array<std::string, 4>& words, int bits);

/// Adds a block translated by `origin` to the tree, labelling its cells, and returns its node.
/// The block is assembled as two spanning trees joined by one edge: the positive faces with the
/// interior, and the mating strip along the west and south sides.
std::size_t add_macro_block(DecompositionTree& tree, Coord origin, const std::array<std::string, 4>& words,
                            int bits, const MacroGlues& glues = {});

}  // namespace sasm::detail
