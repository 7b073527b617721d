#include "split.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sasm/engine.hpp"

namespace sasm::detail {

Coord lower_left(const CellSet& cells) {
    Coord lo = *cells.begin();
    for (auto c : cells) lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
    return lo;
}

CellSet translate(const CellSet& cells, Coord by) {
    CellSet out;
    for (auto c : cells) out.insert(c + by);
    return out;
}

CellLabels null_labels(const CellSet& cells) {
    CellLabels out;
    for (auto c : cells) out[c].fill(std::string(kNullGlue));
    return out;
}

std::vector<Edge> cut_edges(const CellSet& a, const CellSet& b) {
    std::vector<Edge> out;
    for (auto c : a)
        for (Side s : kSides)
            if (b.contains(c + step(s))) out.push_back({c, s});
    return out;
}

bool connected(const CellSet& cells) {
    if (cells.empty()) return false;
    std::vector<Coord> v(cells.begin(), cells.end());
    return is_connected(v);
}

void apply_split(const Split& split, CellLabels& labels) {
    for (std::size_t i = 0; i < split.edges.size(); ++i) {
        const auto& e = split.edges[i];
        labels[e.cell][static_cast<int>(e.side)] = split.labels[i];
        labels[e.cell + step(e.side)][static_cast<int>(opposite(e.side))] = split.labels[i];
    }
}

bool verify_split(const Split& split, const CellLabels& labels) {
    std::map<std::pair<Coord, Side>, std::string> cut;
    for (std::size_t i = 0; i < split.edges.size(); ++i) {
        const auto& e = split.edges[i];
        cut[{e.cell, e.side}] = split.labels[i];
        cut[{e.cell + step(e.side), opposite(e.side)}] = split.labels[i];
    }
    auto side_label = [&](Coord c, Side s) -> const std::string& {
        if (auto it = cut.find({c, s}); it != cut.end()) return it->second;
        return labels.at(c)[static_cast<int>(s)];
    };
    // A tile with one label on two opposite sides chains with itself once it is mixed alone.
    for (const auto& [cs, l] : cut)
        if (side_label(cs.first, opposite(cs.second)) == l) return false;

    GlueTable glues;
    std::map<std::array<std::string, 4>, TileIndex> ids;
    std::vector<Tile> tiles;
    auto tile_for = [&](Coord c, const CellSet& own) {
        std::array<std::string, 4> q;
        for (Side s : kSides) {
            auto& slot = q[static_cast<int>(s)];
            slot = own.contains(c + step(s)) ? std::string(kNullGlue) : side_label(c, s);
            if (slot != kNullGlue && !glues.contains(slot)) glues.declare(slot, 1);
        }
        auto [it, fresh] = ids.emplace(q, static_cast<TileIndex>(tiles.size()));
        if (fresh) tiles.push_back(Tile{"x" + std::to_string(tiles.size()), q});
        return it->second;
    };
    std::vector<Cell> a, b;
    for (auto c : split.first) a.push_back({c, tile_for(c, split.first)});
    for (auto c : split.second) b.push_back({c, tile_for(c, split.second)});
    std::vector<Cell> whole = a;
    whole.insert(whole.end(), b.begin(), b.end());
    TileSet ts(glues, tiles);
    std::vector<Supertile> seeds{Supertile::canonicalize(a), Supertile::canonicalize(b)};
    ClosureBudget budget;
    budget.max_supertile_size = whole.size();
    budget.max_distinct_supertiles = 64;
    auto r = produce_closure(seeds, 1, ts, budget);
    if (!r.complete || r.terminal.size() != 1) return false;
    return r.produced[r.terminal.front()] == Supertile::canonicalize(whole);
}

std::string PieceSolver::key(const CellSet& piece, const CellLabels& labels) const {
    const Coord lo = lower_left(piece);
    std::ostringstream os;
    for (auto c : piece) {
        os << (c.x - lo.x) << ',' << (c.y - lo.y);
        for (Side s : kSides)
            if (!piece.contains(c + step(s))) os << ':' << labels.at(c)[static_cast<int>(s)];
        os << ';';
    }
    return os.str();
}

bool PieceSolver::search(const CellSet& piece, const CellLabels& labels,
                         const std::function<bool(const Split&)>& accept) {
    const std::vector<Coord> cells(piece.begin(), piece.end());
    const std::size_t n = cells.size();
    std::vector<Split> candidates;
    // cells[0] always stays in the first half so each partition is listed once
    for (std::uint32_t mask = 1; mask < (1u << n) - 1; mask += 2) {
        Split s;
        for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? s.first : s.second).insert(cells[i]);
        if (!connected(s.first) || !connected(s.second)) continue;
        s.edges = cut_edges(s.first, s.second);
        candidates.push_back(std::move(s));
    }
    auto cost = [](const Split& s) {
        const auto a = s.first.size(), b = s.second.size();
        return std::make_pair(s.edges.size(), a > b ? a - b : b - a);
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Split& a, const Split& b) { return cost(a) < cost(b); });

    const std::size_t p = pool_.size();
    for (auto& s : candidates) {
        const std::size_t k = s.edges.size();
        std::vector<std::size_t> digits(k, 0);
        while (true) {
            if (++attempts_ > attempt_limit) throw std::runtime_error("piece search exceeded its attempt limit");
            s.labels.clear();
            for (auto d : digits) s.labels.push_back(pool_[d]);
            if (verify_split(s, labels) && accept(s)) return true;
            std::size_t i = 0;
            while (i < k && ++digits[i] == p) digits[i++] = 0;
            if (i == k) break;
        }
    }
    return false;
}

bool PieceSolver::attempt(const Split& split, std::size_t node, CellLabels& labels, DecompositionTree& tree) {
    const auto saved_labels = labels;
    const auto saved_size = tree.nodes.size();
    apply_split(split, labels);
    auto a = solve(split.first, labels, tree);
    std::optional<std::size_t> b;
    if (a) b = solve(split.second, labels, tree);
    if (!a || !b) {
        labels = saved_labels;
        tree.nodes.resize(saved_size);
        return false;
    }
    tree.nodes[node].cut = split.axis;
    tree.nodes[node].cut_index = split.index;
    tree.nodes[node].children = {*a, *b};
    return true;
}

std::optional<std::size_t> PieceSolver::solve(const CellSet& piece, CellLabels& labels, DecompositionTree& tree) {
    const std::string k = key(piece, labels);
    if (dead_.contains(k)) return std::nullopt;
    if (piece.size() > size_limit) return std::nullopt;
    const std::size_t node = tree.add(std::vector<Coord>(piece.begin(), piece.end()));
    if (piece.size() == 1) return node;

    const Coord lo = lower_left(piece);
    if (auto it = memo_.find(k); it != memo_.end()) {
        Split split = it->second;
        split.first = translate(split.first, lo);
        split.second = translate(split.second, lo);
        for (auto& e : split.edges) e.cell = e.cell + lo;
        if (attempt(split, node, labels, tree)) return node;
    }
    const bool found = search(piece, labels, [&](const Split& s) {
        if (!attempt(s, node, labels, tree)) return false;
        Split rel = s;
        const Coord back{-lo.x, -lo.y};
        rel.first = translate(rel.first, back);
        rel.second = translate(rel.second, back);
        for (auto& e : rel.edges) e.cell = e.cell + back;
        memo_.insert_or_assign(k, std::move(rel));
        return true;
    });
    if (found) return node;
    dead_.insert(k);
    tree.nodes.resize(node);
    return std::nullopt;
}

void declare_used_glues(DecompositionTree& tree) {
    std::set<std::string> used;
    for (const auto& [c, q] : tree.labels)
        for (const auto& l : q)
            if (l != kNullGlue) used.insert(l);
    for (const auto& l : used)
        if (!tree.glues.contains(l)) tree.glues.declare(l, 1);
}

}  // namespace sasm::detail
