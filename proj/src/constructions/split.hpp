#pragma once

// Decomposition helpers in which every cut is checked with the engine: the two halves, carrying
// only the glues on their outer boundary, must have the parent as their single terminal when
// mixed.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sasm/constructions.hpp"

namespace sasm::detail {

using CellSet = std::set<Coord>;

struct Edge {
    Coord cell;  // the edge joins cell and cell + step(side)
    Side side;
};

struct Split {
    CellSet first;
    CellSet second;
    std::vector<Edge> edges;          // edges crossing the cut
    std::vector<std::string> labels;  // one per edge
    CutAxis axis = CutAxis::None;
    int index = 0;
};

std::vector<Edge> cut_edges(const CellSet& a, const CellSet& b);
bool connected(const CellSet& cells);
Coord lower_left(const CellSet& cells);
CellSet translate(const CellSet& cells, Coord by);
CellLabels null_labels(const CellSet& cells);

/// Whether mixing the two halves (current boundary labels plus the split's cut labels) yields
/// exactly their union as the single terminal.
bool verify_split(const Split& split, const CellLabels& labels);

void apply_split(const Split& split, CellLabels& labels);

/// Exhaustive decomposition of small pieces with backtracking. Results are memoized on the
/// piece's translated shape and boundary labels, so equal pieces decompose identically.
class PieceSolver {
public:
    explicit PieceSolver(std::vector<std::string> pool) : pool_(std::move(pool)) {}

    /// Appends a subtree for `piece` to `tree` (returning its root) and fills the labels of the
    /// piece's interior edges, or returns nullopt leaving both untouched.
    std::optional<std::size_t> solve(const CellSet& piece, CellLabels& labels, DecompositionTree& tree);

    std::size_t size_limit = 16;
    std::size_t attempt_limit = 2'000'000;

private:
    bool search(const CellSet& piece, const CellLabels& labels, const std::function<bool(const Split&)>& accept);
    bool attempt(const Split& split, std::size_t node, CellLabels& labels, DecompositionTree& tree);
    std::string key(const CellSet& piece, const CellLabels& labels) const;

    std::vector<std::string> pool_;
    std::map<std::string, Split> memo_;  // splits relative to the piece's lower-left corner
    std::set<std::string> dead_;
    std::size_t attempts_ = 0;
};

/// Spanning tree of `piece` with its edges labelled in `tree` by glues[0] or glues[1], alternating
/// along straight runs. Returns the tree's adjacency.
std::map<Coord, std::vector<Coord>> label_spanning_tree(DecompositionTree& tree, const CellSet& piece,
                                                        const std::array<std::string, 2>& glues);

/// Adds the assembly of a labelled spanning tree rooted at `root`: each vertex's bin mixes its tile
/// with its finished child subtrees. Returns the subtree's node.
std::size_t add_spanning_nodes(DecompositionTree& tree, const std::map<Coord, std::vector<Coord>>& adj, Coord root);

/// Compiles the children of a virtual root as separate outputs, one BinRef each in child order, all
/// in the last stage.
StagedSystem compile_forest(const DecompositionTree& tree, const std::string& name);

/// Finishes a tree: declares the glues that occur in its labels.
void declare_used_glues(DecompositionTree& tree);

}  // namespace sasm::detail
