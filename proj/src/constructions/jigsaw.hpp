#pragma once

// Jigsaw cuts shared by the square and monotone builders.

#include <optional>
#include <string>
#include <vector>

#include "split.hpp"

namespace sasm::detail {

struct JigsawCut {
    Split split;
    Coord tab_lo;  // end cell of the cut line with the smaller cross coordinate
    Coord tab_hi;
};

/// Cut the piece along column (or row) `cut`. The two end cells of that line go to the first
/// piece as tabs; the rest of it goes to the second.
std::optional<JigsawCut> jigsaw_cut_at(const CellSet& piece, CutAxis axis, int cut);
std::pair<int, int> extent(const CellSet& piece, CutAxis axis);
/// Line i = floor((m + 1) / 2) of an extent of m >= 4.
std::optional<JigsawCut> jigsaw_cut(const CellSet& piece, CutAxis axis);
/// As jigsaw_cut, falling back to the nearest interior line whose halves stay connected.
std::optional<JigsawCut> nearest_jigsaw_cut(const CellSet& piece, CutAxis axis);

int third(int a, int b);
bool horizontal_edge(const Edge& e);
bool touches(const Edge& e, Coord c);

// Glues j1..j9 form three triples. Edges crossing a vertical cut with triple T carry j(3T+1),
// j(3T+2), j(3T+3) on their east/west sides (top tab, main run, bottom tab); the tab edges facing
// north/south carry j(7+T). Horizontal cuts rotate the triples the same way on their north/south
// sides (left tab, main run, right tab); their east/west tab edges draw on the triple that bounds
// neither side of the column strip, so they cannot meet the strip's own boundary glues.
class Builder {
public:
    virtual ~Builder() = default;

    Builder(const CellSet& square, std::vector<std::string> pool)
        : pool_(pool), labels_(null_labels(square)), leaves_(std::move(pool)) {}

    DecompositionTree run(const CellSet& square) {
        vertical(square, -1, -1);
        tree_.labels = labels_;
        declare_used_glues(tree_);
        return std::move(tree_);
    }

protected:
    virtual std::size_t vertical(const CellSet& piece, int left, int right) {
        auto cut = jigsaw_cut(piece, CutAxis::Vertical);
        if (!cut) return horizontal(piece, third(left, right), -1, -1);
        const int t = third(left, right);
        for (const auto& e : cut->split.edges) {
            if (!horizontal_edge(e)) cut->split.labels.push_back(pool_[6 + t]);
            else if (touches(e, cut->tab_hi)) cut->split.labels.push_back(pool_[3 * t]);
            else if (touches(e, cut->tab_lo)) cut->split.labels.push_back(pool_[3 * t + 2]);
            else cut->split.labels.push_back(pool_[3 * t + 1]);
        }
        const std::size_t node = commit(piece, cut->split);
        const std::size_t a = vertical(cut->split.first, left, t);
        const std::size_t b = vertical(cut->split.second, t, right);
        tree_.nodes[node].children = {a, b};
        return node;
    }

    std::size_t horizontal(const CellSet& piece, int spare, int below, int above) {
        if (auto node = try_horizontal(piece, spare, below, above)) return *node;
        // The strip's deterministic cuts left a piece without a labelling; search the strip whole.
        if (auto node = row_cuts(piece)) return *node;
        throw std::logic_error("no labelling found for a " + std::to_string(piece.size()) + "-cell piece");
    }

    std::optional<std::size_t> try_horizontal(const CellSet& piece, int spare, int below, int above) {
        auto cut = nearest_jigsaw_cut(piece, CutAxis::Horizontal);
        if (!cut) return leaves_.solve(piece, labels_, tree_);
        const int g = third(below, above);
        for (const auto& e : cut->split.edges) {
            if (horizontal_edge(e)) {
                const int role = touches(e, cut->tab_lo) ? g : (g + 1) % 3;
                cut->split.labels.push_back(pool_[3 * spare + role]);
            } else if (touches(e, cut->tab_lo)) cut->split.labels.push_back(pool_[3 * g]);
            else if (touches(e, cut->tab_hi)) cut->split.labels.push_back(pool_[3 * g + 2]);
            else cut->split.labels.push_back(pool_[3 * g + 1]);
        }
        if (!verify_split(cut->split, labels_)) return std::nullopt;
        const auto saved_labels = labels_;
        const std::size_t node = commit(piece, cut->split);
        auto a = try_horizontal(cut->split.first, spare, below, g);
        std::optional<std::size_t> b;
        if (a) b = try_horizontal(cut->split.second, spare, g, above);
        if (!a || !b) {
            labels_ = saved_labels;
            tree_.nodes.resize(node);
            return std::nullopt;
        }
        tree_.nodes[node].children = {*a, *b};
        return node;
    }

    // Plain row cuts of at most four edges with any labelling, down to pieces the solver takes.
    std::optional<std::size_t> row_cuts(const CellSet& piece) {
        if (piece.size() <= leaves_.size_limit) return leaves_.solve(piece, labels_, tree_);
        const auto [lo, hi] = extent(piece, CutAxis::Horizontal);
        const int mid = (lo + hi) / 2;
        for (int d = 0; d <= hi - lo; ++d)
            for (int r : {mid - d, mid + d + 1}) {
                if (r <= lo || r > hi) continue;
                Split s;
                s.axis = CutAxis::Horizontal;
                s.index = r;
                for (auto c : piece) (c.y < r ? s.first : s.second).insert(c);
                if (!connected(s.first) || !connected(s.second)) continue;
                s.edges = cut_edges(s.first, s.second);
                if (!search_labels(s)) continue;
                const auto saved_labels = labels_;
                const std::size_t node = commit(piece, s);
                auto a = row_cuts(s.first);
                std::optional<std::size_t> b;
                if (a) b = row_cuts(s.second);
                if (a && b) {
                    tree_.nodes[node].children = {*a, *b};
                    return node;
                }
                labels_ = saved_labels;
                tree_.nodes.resize(node);
            }
        return std::nullopt;
    }

    // First labelling from the pool under which the split assembles uniquely, for at most four edges.
    bool search_labels(Split& s) {
        const std::size_t k = s.edges.size(), p = pool_.size();
        if (k > 4) return false;
        s.labels.assign(k, pool_[0]);
        std::vector<std::size_t> digits(k, 0);
        while (true) {
            for (std::size_t j = 0; j < k; ++j) s.labels[j] = pool_[digits[j]];
            if (verify_split(s, labels_)) return true;
            std::size_t j = 0;
            while (j < k && ++digits[j] == p) digits[j++] = 0;
            if (j == k) return false;
        }
    }

    std::size_t commit(const CellSet& piece, const Split& split) {
        if (!verify_split(split, labels_))
            throw std::logic_error("jigsaw cut at " + std::to_string(split.index) + " does not assemble uniquely");
        apply_split(split, labels_);
        const std::size_t node = tree_.add(std::vector<Coord>(piece.begin(), piece.end()));
        tree_.nodes[node].cut = split.axis;
        tree_.nodes[node].cut_index = split.index;
        return node;
    }

    std::vector<std::string> pool_;
    CellLabels labels_;
    PieceSolver leaves_;
    DecompositionTree tree_;
};


}  // namespace sasm::detail
