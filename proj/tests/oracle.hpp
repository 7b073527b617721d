#pragma once

// Brute-force reference implementations used to cross-check the engine. They share nothing
// with src/ beyond the TileSet glue lookup: no canonicalize(), no edge-matching placement search.

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "sasm/core.hpp"

namespace oracle {

using Cells = std::vector<std::tuple<int, int, sasm::TileIndex>>;

inline Cells normalize(Cells c) {
    int mx = 1 << 30, my = 1 << 30;
    for (auto& [x, y, t] : c) mx = std::min(mx, x), my = std::min(my, y);
    for (auto& [x, y, t] : c) x -= mx, y -= my;
    std::sort(c.begin(), c.end());
    return c;
}

inline Cells from(const sasm::Supertile& s) {
    Cells c;
    for (const auto& cell : s.cells()) c.emplace_back(cell.pos.x, cell.pos.y, cell.tile);
    return normalize(c);
}

inline int extent(const Cells& c, int axis) {
    int m = 0;
    for (const auto& cell : c) m = std::max(m, axis == 0 ? std::get<0>(cell) : std::get<1>(cell));
    return m + 1;
}

// Every placement of b whose bounding box touches or overlaps a's, no overlap, bond sum >= tau.
inline std::set<Cells> combine(const Cells& a, const Cells& b, int tau, const sasm::TileSet& tiles) {
    std::set<Cells> out;
    const int wa = extent(a, 0), ha = extent(a, 1), wb = extent(b, 0), hb = extent(b, 1);
    for (int dx = -wb; dx <= wa; ++dx) {
        for (int dy = -hb; dy <= ha; ++dy) {
            bool overlap = false;
            int strength = 0;
            for (const auto& [ax, ay, at] : a) {
                for (const auto& [bx0, by0, bt] : b) {
                    const int bx = bx0 + dx, by = by0 + dy;
                    if (ax == bx && ay == by) overlap = true;
                    for (sasm::Side s : sasm::kSides) {
                        const auto d = sasm::step(s);
                        if (ax + d.x == bx && ay + d.y == by)
                            strength += tiles.bond(tiles.side_glue(at, s), tiles.side_glue(bt, sasm::opposite(s)));
                    }
                }
            }
            if (overlap || strength < tau) continue;
            Cells merged = a;
            for (const auto& [bx, by, bt] : b) merged.emplace_back(bx + dx, by + dy, bt);
            out.insert(normalize(merged));
        }
    }
    return out;
}

struct Closure {
    std::set<Cells> produced;
    std::set<Cells> terminal;
    bool bounded = true;  // false once something larger than max_cells was produced
};

// Fixpoint by repeated all-pairs rounds; gives up (bounded = false) on any oversized product.
inline Closure closure(const std::vector<Cells>& seeds, int tau, const sasm::TileSet& tiles, std::size_t max_cells,
                       std::size_t max_count = 5000) {
    Closure c;
    for (const auto& s : seeds) c.produced.insert(normalize(s));
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Cells> cur(c.produced.begin(), c.produced.end());
        for (std::size_t i = 0; i < cur.size(); ++i) {
            for (std::size_t j = 0; j < cur.size(); ++j) {
                for (auto& r : combine(cur[i], cur[j], tau, tiles)) {
                    if (r.size() > max_cells || c.produced.size() >= max_count) {
                        c.bounded = false;
                        return c;
                    }
                    if (c.produced.insert(r).second) changed = true;
                }
            }
        }
    }
    for (const auto& x : c.produced) {
        bool grows = false;
        for (const auto& y : c.produced) {
            if (!combine(x, y, tau, tiles).empty()) {
                grows = true;
                break;
            }
        }
        if (!grows) c.terminal.insert(x);
    }
    return c;
}

}  // namespace oracle
