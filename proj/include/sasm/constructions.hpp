#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sasm/core.hpp"
#include "sasm/shape.hpp"
#include "sasm/staged.hpp"

namespace sasm {

enum class ConstructionErrorKind {
    InvalidSize,
    BudgetTooSmall,
    NotSimplyConnected,
    UnsupportedTemperature,
    NotMonotone,
    NotAStringSupertile,
    NotConnected,
};

const char* to_string(ConstructionErrorKind kind);

class ConstructionError : public std::runtime_error {
public:
    ConstructionError(ConstructionErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ConstructionErrorKind kind() const noexcept { return kind_; }

private:
    ConstructionErrorKind kind_;
};

/// Glue labels of every side of every cell of a target shape, (n, e, s, w).
using CellLabels = std::map<Coord, std::array<std::string, 4>>;

enum class CutAxis { None, Vertical, Horizontal };

/// A hierarchical split of a labelled shape. Node 0 is the root; leaves are single cells.
/// Children of a node partition its cells.
struct DecompositionTree {
    struct Node {
        std::vector<Coord> cells;
        std::vector<std::size_t> children;
        CutAxis cut = CutAxis::None;
        int cut_index = 0;  // column (vertical) or row (horizontal) of the cut
    };
    std::vector<Node> nodes;
    CellLabels labels;
    GlueTable glues;

    std::size_t add(std::vector<Coord> cells);
    int height() const;  // root-to-deepest-leaf edge count
};

/// Checks that children partition their parent and every cell of the root is labelled.
/// Returns a description of the first violation.
std::optional<std::string> check_tree(const DecompositionTree& tree);

/// One bin per distinct piece per depth; internal node at depth d sits in stage height - d + 1
/// when it has internal children, leaves are added to their parent's bin as tiles.
StagedSystem compile_tree(const DecompositionTree& tree, const std::string& name, int temperature = 1);

/// Drops bins that cannot reach the output and tiles no remaining bin adds, then drops
/// empty leading stages.
StagedSystem prune_unused(StagedSystem system);

/// Shape of the transcribed three-stage 1x10 example.
StagedSystem line10_system();

StagedSystem gen_line_pow2(int k);
StagedSystem gen_line(int n);

StagedSystem gen_square_jigsaw(int n);

/// Spanning tree data exposed for tests.
struct SpanningTree {
    Coord root;
    std::map<Coord, Coord> parent;                 // absent for the root
    std::map<Coord, std::vector<Coord>> children;  // in the order they are attached
    std::map<Coord, int> depth;
    std::map<std::pair<Coord, Coord>, int> edge_label;  // (parent, child) -> 0 or 1
};

SpanningTree spanning_tree(const Shape& shape);
StagedSystem gen_spanning_tree(const Shape& shape);

StagedSystem gen_scale2(const Shape& shape);

enum class MonotoneCutKind { Plain, JigsawTab, Elbow };

struct MonotoneCut {
    MonotoneCutKind kind = MonotoneCutKind::Plain;
    int column = 0;
};

/// Cuts chosen while decomposing `shape`, in the order they were applied.
std::vector<MonotoneCut> monotone_cuts(const Shape& shape);
StagedSystem gen_monotone(const Shape& shape);

/// A one-stage system: tiles mixed in a single bin.
struct TileSystem {
    GlueTable glues;
    std::vector<Tile> tiles;
    int temperature = 1;
};

/// Side length of the square macro block used to simulate `system`.
int macro_block_side(const TileSystem& system);
StagedSystem gen_simulation(const TileSystem& system);

StagedSystem gen_crazy_string(const std::string& bits, int bins);

/// Bins of one recursion level of the counter, holding strings of `level` bits.
struct CounterSets {
    int level = 0;  // string length
    int stage = 0;
    std::vector<std::string> same;         // S: bins producing equal-valued strings on both faces
    std::vector<std::string> incremented;  // I
    std::vector<std::string> rollover;     // R
};

/// Rows of 2^k bits. The incrementing batch carries south value v and north value v + 1, the
/// identity batch equal values with the lock glues of its faces swapped, so the two alternate in
/// a single chain from the all-zeros row to the all-ones row.
StagedSystem gen_counter(int k);
std::vector<CounterSets> counter_sets(int k);

enum class Face { North, South };

/// Reads the 0/1 pattern that string-encoding generators leave on a face, left to right. Faces
/// marked with glues read b0 and b1 on the outermost cell of each column and skip bn and null.
/// Unmarked faces are read as tooth rows (corner, two cap cells, two cells per bit, two cap
/// cells, corner): a north bit b sticks out at slot b, a south bit s is recessed at slot s.
std::string decode_bits(const Supertile& s, const TileSet& tiles, Face face);

/// Values of the identity rows of a counter chain, bottom to top.
std::vector<std::string> counter_values(const Supertile& chain, const TileSet& tiles);

}  // namespace sasm
