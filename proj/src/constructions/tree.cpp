#include <algorithm>
#include <functional>
#include <set>

#include "sasm/constructions.hpp"
#include "split.hpp"

namespace sasm {

const char* to_string(ConstructionErrorKind kind) {
    switch (kind) {
    case ConstructionErrorKind::InvalidSize: return "InvalidSize";
    case ConstructionErrorKind::BudgetTooSmall: return "BudgetTooSmall";
    case ConstructionErrorKind::NotSimplyConnected: return "NotSimplyConnected";
    case ConstructionErrorKind::UnsupportedTemperature: return "UnsupportedTemperature";
    case ConstructionErrorKind::NotMonotone: return "NotMonotone";
    case ConstructionErrorKind::NotAStringSupertile: return "NotAStringSupertile";
    case ConstructionErrorKind::NotConnected: return "NotConnected";
    }
    return "?";
}

std::size_t DecompositionTree::add(std::vector<Coord> cells) {
    std::sort(cells.begin(), cells.end());
    nodes.push_back(Node{std::move(cells), {}, CutAxis::None, 0});
    return nodes.size() - 1;
}

int DecompositionTree::height() const {
    if (nodes.empty()) return 0;
    std::function<int(std::size_t)> h = [&](std::size_t i) {
        int best = 0;
        for (auto c : nodes[i].children) best = std::max(best, 1 + h(c));
        return best;
    };
    return h(0);
}

std::optional<std::string> check_tree(const DecompositionTree& tree) {
    if (tree.nodes.empty()) return "empty tree";
    for (const auto& c : tree.nodes[0].cells)
        if (!tree.labels.contains(c)) return "unlabelled cell";
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const auto& n = tree.nodes[i];
        if (n.children.empty()) {
            if (n.cells.size() != 1) return "leaf " + std::to_string(i) + " has more than one cell";
            continue;
        }
        std::vector<Coord> joined;
        for (auto c : n.children) {
            if (c >= tree.nodes.size()) return "bad child index";
            joined.insert(joined.end(), tree.nodes[c].cells.begin(), tree.nodes[c].cells.end());
        }
        std::sort(joined.begin(), joined.end());
        if (joined != n.cells) return "children of node " + std::to_string(i) + " do not partition it";
    }
    return std::nullopt;
}

namespace {

StagedSystem compile(const DecompositionTree& tree, const std::string& name, int temperature, bool forest) {
    if (auto err = check_tree(tree)) throw std::invalid_argument("compile_tree: " + *err);
    StagedSystem sys;
    sys.name = name;
    sys.temperature = temperature;
    sys.glues = tree.glues;

    std::map<std::array<std::string, 4>, std::string> tile_of;
    for (const auto& c : tree.nodes[0].cells) tile_of.emplace(tree.labels.at(c), "");
    int next = 0;
    for (auto& [glues, id] : tile_of) {
        id = "t" + std::to_string(next++);
        sys.tiles.push_back(Tile{id, glues});
    }
    auto tile_id = [&](Coord c) { return tile_of.at(tree.labels.at(c)); };

    const int height = std::max(1, tree.height());
    sys.stages.resize(height);
    // Pieces are keyed by their translated cell/tile content so equal pieces share a bin.
    using Key = std::vector<std::pair<Coord, std::string>>;
    std::vector<std::map<Key, std::string>> bins(height + 1);
    auto key_of = [&](const DecompositionTree::Node& n) {
        Coord lo = n.cells.front();
        for (auto c : n.cells) lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
        Key k;
        for (auto c : n.cells) k.emplace_back(c - lo, tile_id(c));
        return k;
    };

    std::function<std::string(std::size_t, int)> emit = [&](std::size_t i, int stage) {
        const auto& n = tree.nodes[i];
        auto key = key_of(n);
        if (auto it = bins[stage].find(key); it != bins[stage].end()) return it->second;
        BinDecl bin;
        bin.name = "b" + std::to_string(bins[stage].size());
        if (n.children.empty()) {
            bin.add.push_back(tile_id(n.cells.front()));
        }
        for (auto c : n.children) {
            if (tree.nodes[c].children.empty()) {
                bin.add.push_back(tile_id(tree.nodes[c].cells.front()));
            } else {
                bin.from.push_back(BinRef{stage - 1, emit(c, stage - 1)});
            }
        }
        std::sort(bin.add.begin(), bin.add.end());
        bin.add.erase(std::unique(bin.add.begin(), bin.add.end()), bin.add.end());
        std::sort(bin.from.begin(), bin.from.end());
        bin.from.erase(std::unique(bin.from.begin(), bin.from.end()), bin.from.end());
        bins[stage].emplace(key, bin.name);
        sys.stages[stage - 1].push_back(bin);
        return bin.name;
    };
    if (!forest) {
        sys.output.push_back(BinRef{height, emit(0, height)});
    } else {
        if (height < 2) throw std::invalid_argument("compile_forest: the root's children must be internal nodes");
        for (auto c : tree.nodes[0].children) sys.output.push_back(BinRef{height - 1, emit(c, height - 1)});
        sys.stages.pop_back();
    }
    return prune_unused(std::move(sys));
}

}  // namespace

StagedSystem compile_tree(const DecompositionTree& tree, const std::string& name, int temperature) {
    return compile(tree, name, temperature, false);
}

namespace detail {

StagedSystem compile_forest(const DecompositionTree& tree, const std::string& name) {
    return compile(tree, name, 1, true);
}

}  // namespace detail

StagedSystem prune_unused(StagedSystem sys) {
    std::set<BinRef> live(sys.output.begin(), sys.output.end());
    for (int s = sys.stage_count(); s >= 1; --s) {
        for (const auto& b : sys.stages[s - 1]) {
            if (!live.contains(BinRef{s, b.name})) continue;
            live.insert(b.from.begin(), b.from.end());
        }
    }
    std::set<std::string> used_tiles;
    for (int s = 1; s <= sys.stage_count(); ++s) {
        auto& stage = sys.stages[s - 1];
        std::erase_if(stage, [&](const BinDecl& b) { return !live.contains(BinRef{s, b.name}); });
        for (const auto& b : stage) used_tiles.insert(b.add.begin(), b.add.end());
    }
    std::erase_if(sys.tiles, [&](const Tile& t) { return !used_tiles.contains(t.id); });

    int drop = 0;
    while (drop < sys.stage_count() && sys.stages[drop].empty()) ++drop;
    if (drop > 0) {
        sys.stages.erase(sys.stages.begin(), sys.stages.begin() + drop);
        for (auto& stage : sys.stages)
            for (auto& b : stage)
                for (auto& r : b.from) r.stage -= drop;
        for (auto& r : sys.output) r.stage -= drop;
    }
    return sys;
}

}  // namespace sasm
