#include "macro.hpp"

#include <algorithm>
#include <stdexcept>

namespace sasm::detail {

namespace {

bool positive(Side s) { return s == Side::North || s == Side::East; }

// Cell at outward coordinate u and position t along the face.
Coord face_cell(Side s, int side_len, int u, int t) {
    if (s == Side::East || s == Side::West) return {u, t};
    return {side_len - 1 - t, u};
}

struct Face {
    CellSet add, remove;
    std::vector<Coord> lock;  // cells whose outward side carries the lock glue
};

Face face(Side s, const std::string& word, int bits) {
    const int n = macro_side(bits);
    Face f;
    const int out = positive(s) ? n : -1;
    const int edge = positive(s) ? n - 1 : 0;
    auto tab = [&](int t) { f.add.insert(face_cell(s, n, out, t)); };
    auto pocket = [&](int t) { f.remove.insert(face_cell(s, n, edge, t)); };
    for (int t : {1, 2}) {
        if (positive(s)) {
            tab(t);
            f.lock.push_back(face_cell(s, n, out, t));
        } else {
            pocket(t);
            f.lock.push_back(face_cell(s, n, 1, t));
        }
    }
    for (int t : {2 * bits + 3, 2 * bits + 4}) positive(s) ? pocket(t) : tab(t);
    for (int j = 0; j < bits; ++j) {
        const int t = 3 + 2 * j, b = word[j] == '1';
        if (positive(s)) {
            tab(t + b);
            pocket(t + 1 - b);
        } else {
            pocket(t + b);
            tab(t + 1 - b);
        }
    }
    return f;
}

}  // namespace

int macro_word_bits(std::size_t count) {
    int r = 1;
    while ((std::size_t{1} << r) < count) ++r;
    return r;
}

int macro_side(int bits) { return 2 * bits + 6; }

std::string macro_word(std::size_t index, int bits) {
    std::string w(bits, '0');
    for (int j = 0; j < bits; ++j)
        if (index >> (bits - 1 - j) & 1) w[j] = '1';
    return w;
}

CellSet macro_cells(const std::array<std::string, 4>& words, int bits) {
    const int n = macro_side(bits);
    CellSet cells;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) cells.insert({x, y});
    for (Side s : kSides) {
        const auto& w = words[static_cast<int>(s)];
        if (w.empty()) continue;
        if (static_cast<int>(w.size()) != bits) throw std::invalid_argument("macro word of the wrong length");
        const Face f = face(s, w, bits);
        for (auto c : f.remove) cells.erase(c);
        cells.insert(f.add.begin(), f.add.end());
    }
    return cells;
}

std::size_t add_macro_block(DecompositionTree& tree, Coord origin, const std::array<std::string, 4>& words,
                            int bits, const MacroGlues& glues) {
    const int n = macro_side(bits);
    const CellSet local = macro_cells(words, bits);
    CellSet positive_part, mating_part;
    for (auto c : local) {
        const bool mating = (c.x <= 1 || c.y <= 1) && c.x < n && c.y < n;
        (mating ? mating_part : positive_part).insert(c + origin);
    }
    for (auto c : local) tree.labels[c + origin].fill(std::string(kNullGlue));
    for (Side s : kSides) {
        const auto& w = words[static_cast<int>(s)];
        if (w.empty()) continue;
        for (auto c : face(s, w, bits).lock) tree.labels[c + origin][static_cast<int>(s)] = glues.lock;
    }

    const auto pos_tree = label_spanning_tree(tree, positive_part, glues.tree);
    const auto mat_tree = label_spanning_tree(tree, mating_part, glues.tree);

    // Join the parts with one edge whose glue differs from the tree glues straight across it at
    // both ends; otherwise either end tile could bond to a copy of itself.
    for (auto p : positive_part)
        for (Side s : {Side::West, Side::South}) {
            const Coord q = p + step(s);
            if (!mating_part.contains(q)) continue;
            for (const auto& g : glues.tree) {
                if (tree.labels[p][static_cast<int>(opposite(s))] == g || tree.labels[q][static_cast<int>(s)] == g)
                    continue;
                tree.labels[p][static_cast<int>(s)] = g;
                tree.labels[q][static_cast<int>(opposite(s))] = g;
                std::vector<Coord> all(local.size());
                std::transform(local.begin(), local.end(), all.begin(), [&](Coord c) { return c + origin; });
                const std::size_t node = tree.add(std::move(all));
                const std::size_t a = add_spanning_nodes(tree, pos_tree, p);
                const std::size_t b = add_spanning_nodes(tree, mat_tree, q);
                tree.nodes[node].children = {a, b};
                return node;
            }
        }
    throw std::logic_error("no joining edge for a macro block");
}

}  // namespace sasm::detail
