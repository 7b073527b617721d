#include <algorithm>
#include <map>
#include <set>

#include "sasm/constructions.hpp"
#include "split.hpp"

namespace sasm {

namespace {

// Rows are three cells tall with one tooth layer above and below. Bit j of a row occupies
// columns 3 + 2j and 4 + 2j; the north face carries a tab at slot n and a pocket at slot 1 - n,
// the south face a pocket at slot s and a tab at slot 1 - s, so a row locks only onto one whose
// north value equals its south value. The caps and corners at the ends are those of macro glues:
// the west cap holds the lock glue, the east cap blocks shifted placements.
constexpr int kHeight = 3;

enum class Part { Whole, Left, Middle, Right };

// A family of pieces: which end caps they carry, their batch (capped pieces only) and the glues
// on their uncapped west and east ends (-1 when capped).
struct Key {
    Part part = Part::Middle;
    int batch = 0;
    int west = -1, east = -1;

    friend auto operator<=>(const Key&, const Key&) = default;
};

bool capped_west(Part p) { return p == Part::Whole || p == Part::Left; }
bool capped_east(Part p) { return p == Part::Whole || p == Part::Right; }

std::string end_glue(int e) { return "e" + std::to_string(e); }

// The incrementing batch locks north with k1 and south with k2; the identity batch is swapped.
std::string lock_glue(int batch, Side side) { return (batch == 1) == (side == Side::North) ? "k1" : "k2"; }

std::string key_name(const Key& k) {
    switch (k.part) {
    case Part::Whole: return "W" + std::to_string(k.batch);
    case Part::Left: return "L" + std::to_string(k.batch) + "_" + std::to_string(k.east);
    case Part::Right: return "R" + std::to_string(k.batch) + "_" + std::to_string(k.west);
    case Part::Middle: break;
    }
    return "M" + std::to_string(k.west) + std::to_string(k.east);
}

// Left and right halves of a piece. Three end glues rotate so that the halves' shared end differs
// from both outer ends and no product can bond to another.
std::pair<Key, Key> halves(const Key& k) {
    auto next = [](int e) { return (e + 1) % 3; };
    switch (k.part) {
    case Part::Whole: return {{Part::Left, k.batch, -1, 0}, {Part::Right, k.batch, 0, -1}};
    case Part::Left: {
        const int r = next(k.east);
        return {{Part::Left, k.batch, -1, r}, {Part::Middle, 0, r, k.east}};
    }
    case Part::Right: {
        const int r = next(k.west);
        return {{Part::Middle, 0, k.west, r}, {Part::Right, k.batch, r, -1}};
    }
    case Part::Middle: break;
    }
    const int r = 3 - k.west - k.east;
    return {{Part::Middle, 0, k.west, r}, {Part::Middle, 0, r, k.east}};
}

// Sets of strings: S (same value on both faces), I (incremented), R (rollover).
using Demand = std::map<Key, std::set<char>>;

std::vector<Demand> demands(int k) {
    std::vector<Demand> d(k + 1);
    d[k][{Part::Whole, 1}] = {'I'};
    d[k][{Part::Whole, 2}] = {'S'};
    for (int level = k; level > 0; --level)
        for (const auto& [key, sets] : d[level]) {
            const auto [l, r] = halves(key);
            for (char c : sets) {
                if (c == 'S') {
                    d[level - 1][l].insert('S');
                    d[level - 1][r].insert('S');
                } else if (c == 'I') {
                    d[level - 1][l].insert({'S', 'I'});
                    d[level - 1][r].insert({'I', 'R'});
                } else {
                    d[level - 1][l].insert('R');
                    d[level - 1][r].insert('R');
                }
            }
        }
    return d;
}

// South and north bits of the one-bit pieces of each set.
std::vector<std::pair<int, int>> one_bit_strings(char set) {
    if (set == 'S') return {{0, 0}, {1, 1}};
    if (set == 'I') return {{0, 1}};
    return {{1, 0}};
}

struct Piece {
    detail::CellSet cells;
    CellLabels labels;
};

Piece one_bit_piece(const Key& key, int south, int north) {
    Piece p;
    const int off = capped_west(key.part) ? 3 : 0;
    auto column = [&](int x, int lo, int hi) {
        for (int y = lo; y <= hi; ++y) p.cells.insert({x, y});
    };
    if (capped_west(key.part)) {
        column(0, 0, kHeight - 1);
        column(1, 1, kHeight);
        column(2, 1, kHeight);
    }
    column(off, 0, kHeight - 1);
    column(off + 1, 0, kHeight - 1);
    p.cells.insert({off + north, kHeight});
    p.cells.erase({off + 1 - north, kHeight - 1});
    p.cells.erase({off + south, 0});
    p.cells.insert({off + 1 - south, -1});
    const int last = off + (capped_east(key.part) ? 4 : 1);
    if (capped_east(key.part)) {
        column(off + 2, -1, kHeight - 2);
        column(off + 3, -1, kHeight - 2);
        column(off + 4, 0, kHeight - 1);
    }

    p.labels = detail::null_labels(p.cells);
    if (capped_west(key.part))
        for (int x : {1, 2}) {
            p.labels[{x, kHeight}][static_cast<int>(Side::North)] = lock_glue(key.batch, Side::North);
            p.labels[{x, 1}][static_cast<int>(Side::South)] = lock_glue(key.batch, Side::South);
        }
    else
        p.labels[{0, 1}][static_cast<int>(Side::West)] = end_glue(key.west);
    if (!capped_east(key.part)) p.labels[{last, 1}][static_cast<int>(Side::East)] = end_glue(key.east);
    return p;
}

struct Plan {
    StagedSystem system;
    std::vector<CounterSets> levels;
};

Plan plan(int k) {
    if (k < 0) throw ConstructionError(ConstructionErrorKind::InvalidSize, "counter level must be non-negative");
    const auto demand = demands(k);

    // One-bit pieces are assembled along spanning trees, each as a child of a virtual root.
    DecompositionTree tree;
    tree.add({});
    std::vector<std::pair<Key, char>> owners;
    int x = 0;
    for (const auto& [key, sets] : demand[0])
        for (char set : sets)
            for (auto [s, n] : one_bit_strings(set)) {
                Piece piece = one_bit_piece(key, s, n);
                detail::CellSet placed = detail::translate(piece.cells, {x, 0});
                for (const auto& [c, l] : piece.labels) tree.labels[c + Coord{x, 0}] = l;
                const auto adj = detail::label_spanning_tree(tree, placed, {"g0", "g1"});
                const std::size_t node = detail::add_spanning_nodes(tree, adj, *placed.begin());
                tree.nodes[0].children.push_back(node);
                tree.nodes[0].cells.insert(tree.nodes[0].cells.end(), placed.begin(), placed.end());
                owners.emplace_back(key, set);
                x += 12;
            }
    std::sort(tree.nodes[0].cells.begin(), tree.nodes[0].cells.end());
    detail::declare_used_glues(tree);

    Plan out;
    StagedSystem& sys = out.system = detail::compile_forest(tree, "counter_k" + std::to_string(k));
    const int base = sys.stage_count();

    // Bins holding each set of each piece family at the current level.
    std::map<std::pair<Key, char>, std::vector<BinRef>> bins;
    for (std::size_t i = 0; i < owners.size(); ++i) {
        auto& v = bins[owners[i]];
        if (std::find(v.begin(), v.end(), sys.output[i]) == v.end()) v.push_back(sys.output[i]);
    }
    auto record = [&](int level, int stage) {
        CounterSets cs;
        cs.level = 1 << level;
        cs.stage = stage;
        for (const auto& [owner, refs] : bins)
            for (const auto& r : refs) {
                auto& list = owner.second == 'S' ? cs.same : owner.second == 'I' ? cs.incremented : cs.rollover;
                if (std::find(list.begin(), list.end(), r.name) == list.end()) list.push_back(r.name);
            }
        out.levels.push_back(cs);
    };
    record(0, base);

    for (int level = 1; level <= k; ++level) {
        const int stage = base + level;
        std::map<std::pair<Key, char>, std::vector<BinRef>> next;
        sys.stages.emplace_back();
        auto mix = [&](const std::string& name, const std::vector<BinRef>& a, const std::vector<BinRef>& b) {
            BinDecl bin;
            bin.name = name;
            bin.from = a;
            bin.from.insert(bin.from.end(), b.begin(), b.end());
            sys.stages.back().push_back(bin);
            return BinRef{stage, name};
        };
        for (const auto& [key, sets] : demand[level]) {
            const auto [l, r] = halves(key);
            const std::string name = key_name(key);
            for (char set : sets) {
                auto& refs = next[{key, set}];
                if (set == 'S') refs.push_back(mix(name + "_S", bins.at({l, 'S'}), bins.at({r, 'S'})));
                if (set == 'R') refs.push_back(mix(name + "_R", bins.at({l, 'R'}), bins.at({r, 'R'})));
                if (set == 'I') {
                    // The lowest 0 lies in the right half, or the right half rolls over.
                    refs.push_back(mix(name + "_I0", bins.at({l, 'S'}), bins.at({r, 'I'})));
                    refs.push_back(mix(name + "_I1", bins.at({l, 'I'}), bins.at({r, 'R'})));
                }
            }
        }
        bins = std::move(next);
        record(level, stage);
    }

    BinDecl chain;
    chain.name = "chain";
    chain.from = bins.at({Key{Part::Whole, 1}, 'I'});
    const auto& same = bins.at({Key{Part::Whole, 2}, 'S'});
    chain.from.insert(chain.from.end(), same.begin(), same.end());
    sys.stages.push_back({chain});
    sys.output = {BinRef{sys.stage_count(), "chain"}};
    return out;
}

}  // namespace

StagedSystem gen_counter(int k) { return plan(k).system; }

std::vector<CounterSets> counter_sets(int k) { return plan(k).levels; }

}  // namespace sasm
