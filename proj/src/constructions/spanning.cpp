#include <algorithm>
#include <deque>
#include <cstdint>
#include <functional>
#include <random>
#include <set>

#include "sasm/constructions.hpp"
#include "split.hpp"

namespace sasm {

namespace {

using EdgeKey = std::pair<Coord, Coord>;  // ordered low, high

EdgeKey edge_key(Coord a, Coord b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

// Maximal runs of collinear tree edges, each listed from its low end.
std::vector<std::vector<EdgeKey>> straight_runs(const std::set<EdgeKey>& edges) {
    std::vector<std::vector<EdgeKey>> runs;
    for (const auto& e : edges) {
        const Coord d = e.second - e.first;
        if (edges.contains(edge_key(e.first - d, e.first))) continue;
        auto& run = runs.emplace_back();
        for (EdgeKey cur = e; edges.contains(cur); cur = {cur.second, cur.second + d}) run.push_back(cur);
    }
    return runs;
}

using Adjacency = std::map<Coord, std::vector<Coord>>;

Adjacency bfs_tree(const std::set<Coord>& inside, Coord start, const std::array<Side, 4>& order) {
    Adjacency adj;
    std::set<Coord> seen{start};
    std::deque<Coord> queue{start};
    while (!queue.empty()) {
        const Coord c = queue.front();
        queue.pop_front();
        for (Side s : order) {
            const Coord d = c + step(s);
            if (!inside.contains(d) || !seen.insert(d).second) continue;
            adj[c].push_back(d);
            adj[d].push_back(c);
            queue.push_back(d);
        }
    }
    return adj;
}

struct Labelled {
    std::map<EdgeKey, int> label;
    std::size_t tiles = 0;
};

// Labels alternate along every straight run, so a tile's parent edge differs from the child
// edge straight across from it, and children on opposite sides get different labels. Each run's
// starting label is free; pick the starts that minimise the number of distinct tiles.
Labelled label_runs(const std::set<Coord>& inside, const Adjacency& adj) {
    std::set<EdgeKey> edges;
    for (const auto& [c, ns] : adj)
        for (auto d : ns) edges.insert(edge_key(c, d));
    const auto runs = straight_runs(edges);
    auto evaluate = [&](const std::vector<int>& phase) {
        Labelled out;
        for (std::size_t r = 0; r < runs.size(); ++r)
            for (std::size_t i = 0; i < runs[r].size(); ++i)
                out.label[runs[r][i]] = static_cast<int>((phase[r] + i) % 2);
        std::set<std::array<int, 4>> tiles;
        for (auto c : inside) {
            std::array<int, 4> q{-1, -1, -1, -1};
            for (Side s : kSides)
                if (auto it = out.label.find(edge_key(c, c + step(s))); it != out.label.end())
                    q[static_cast<int>(s)] = it->second;
            tiles.insert(q);
        }
        out.tiles = tiles.size();
        return out;
    };
    std::mt19937 rng(1);
    Labelled best;
    best.tiles = SIZE_MAX;
    for (int restart = 0; restart < 8; ++restart) {
        std::vector<int> phase(runs.size(), 0);
        if (restart > 0)
            for (auto& p : phase) p = static_cast<int>(rng() & 1);
        auto cur = evaluate(phase);
        for (bool improved = true; improved;) {
            improved = false;
            for (std::size_t r = 0; r < runs.size(); ++r) {
                phase[r] ^= 1;
                if (auto next = evaluate(phase); next.tiles < cur.tiles) {
                    cur = std::move(next);
                    improved = true;
                } else {
                    phase[r] ^= 1;
                }
            }
        }
        if (cur.tiles < best.tiles) best = std::move(cur);
    }
    return best;
}

}  // namespace

SpanningTree spanning_tree(const Shape& shape) {
    const std::set<Coord> inside(shape.cells().begin(), shape.cells().end());

    // Breadth-first trees from a few start cells and neighbour orders; keep the one needing the
    // fewest tiles.
    const std::array<std::array<Side, 4>, 4> orders{{
        {Side::East, Side::North, Side::West, Side::South},
        {Side::North, Side::East, Side::South, Side::West},
        {Side::West, Side::South, Side::East, Side::North},
        {Side::South, Side::West, Side::North, Side::East},
    }};
    std::vector<Coord> starts(inside.begin(), inside.end());
    if (starts.size() > 16) {
        std::vector<Coord> spread;
        for (std::size_t i = 0; i < 16; ++i) spread.push_back(starts[i * starts.size() / 16]);
        starts = spread;
    }
    Adjacency adj;
    Labelled labels;
    labels.tiles = SIZE_MAX;
    for (auto start : starts) {
        for (const auto& order : orders) {
            auto a = bfs_tree(inside, start, order);
            auto l = label_runs(inside, a);
            if (l.tiles < labels.tiles) {
                adj = std::move(a);
                labels = std::move(l);
            }
        }
    }

    SpanningTree t;
    t.root = *inside.begin();
    for (auto c : inside)
        if (adj[c].size() <= 1) {
            t.root = c;
            break;
        }
    std::deque<Coord> order{t.root};
    t.depth[t.root] = 0;
    while (!order.empty()) {
        const Coord c = order.front();
        order.pop_front();
        t.children[c];
        for (auto d : adj[c]) {
            if (t.depth.contains(d)) continue;
            t.parent[d] = c;
            t.children[c].push_back(d);
            t.depth[d] = t.depth[c] + 1;
            order.push_back(d);
        }
    }
    for (const auto& [e, l] : labels.label) {
        const bool first_is_parent = t.parent.contains(e.second) && t.parent.at(e.second) == e.first;
        t.edge_label[first_is_parent ? e : EdgeKey{e.second, e.first}] = l;
    }
    return t;
}

namespace detail {

std::map<Coord, std::vector<Coord>> label_spanning_tree(DecompositionTree& tree, const CellSet& piece,
                                                        const std::array<std::string, 2>& glues) {
    const Coord shift = lower_left(piece);
    const SpanningTree t = spanning_tree(Shape::from_cells({piece.begin(), piece.end()}));
    std::map<Coord, std::vector<Coord>> adj;
    for (auto c : piece) adj[c];
    for (const auto& [pc, l] : t.edge_label) {
        const Coord a = pc.first + shift, b = pc.second + shift;
        adj[a].push_back(b);
        adj[b].push_back(a);
        for (Side s : kSides)
            if (a + step(s) == b) {
                tree.labels[a][static_cast<int>(s)] = glues[l];
                tree.labels[b][static_cast<int>(opposite(s))] = glues[l];
            }
    }
    return adj;
}

std::size_t add_spanning_nodes(DecompositionTree& tree, const std::map<Coord, std::vector<Coord>>& adj, Coord root) {
    std::function<void(Coord, Coord, std::vector<Coord>&)> collect = [&](Coord v, Coord from, std::vector<Coord>& out) {
        out.push_back(v);
        for (auto c : adj.at(v))
            if (c != from) collect(c, v, out);
    };
    std::function<std::size_t(Coord, Coord)> build = [&](Coord v, Coord from) {
        std::vector<Coord> cells;
        collect(v, from, cells);
        const std::size_t node = tree.add(std::move(cells));
        std::vector<std::size_t> kids;
        for (auto c : adj.at(v))
            if (c != from) kids.push_back(build(c, v));
        if (!kids.empty()) kids.insert(kids.begin(), tree.add({v}));
        tree.nodes[node].children = kids;
        return node;
    };
    // The root has no parent; a cell outside the tree serves as its "from".
    Coord outside = adj.begin()->first;
    outside.x -= 1;
    return build(root, outside);
}

}  // namespace detail

StagedSystem gen_spanning_tree(const Shape& shape) {
    const SpanningTree t = spanning_tree(shape);
    DecompositionTree tree;
    for (const auto& c : shape.cells()) tree.labels[c].fill(std::string(kNullGlue));
    for (const auto& [pc, l] : t.edge_label) {
        const auto [p, c] = pc;
        const std::string glue = "g" + std::to_string(l);
        for (Side s : kSides)
            if (p + step(s) == c) {
                tree.labels[p][static_cast<int>(s)] = glue;
                tree.labels[c][static_cast<int>(opposite(s))] = glue;
            }
    }
    for (const auto& l : {"g0", "g1"})
        for (const auto& [c, q] : tree.labels)
            if (std::find(q.begin(), q.end(), l) != q.end() && !tree.glues.contains(l)) tree.glues.declare(l, 1);

    // A vertex's bin mixes its own tile with the finished subtrees of its children.
    std::function<std::vector<Coord>(Coord)> subtree = [&](Coord v) {
        std::vector<Coord> out{v};
        for (auto c : t.children.at(v)) {
            auto sub = subtree(c);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    };
    std::function<std::size_t(Coord)> build = [&](Coord v) {
        const std::size_t node = tree.add(subtree(v));
        if (t.children.at(v).empty()) return node;
        std::vector<std::size_t> kids{tree.add({v})};
        for (auto c : t.children.at(v)) kids.push_back(build(c));
        tree.nodes[node].children = kids;
        return node;
    };
    build(t.root);
    return compile_tree(tree, "spanning_tree");
}

}  // namespace sasm
