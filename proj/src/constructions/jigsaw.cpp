#include <algorithm>
#include <stdexcept>

#include "sasm/constructions.hpp"
#include "jigsaw.hpp"

namespace sasm {

namespace detail {

std::optional<JigsawCut> jigsaw_cut_at(const CellSet& piece, CutAxis axis, int cut) {
    auto along = [&](Coord c) { return axis == CutAxis::Vertical ? c.x : c.y; };
    auto across = [&](Coord c) { return axis == CutAxis::Vertical ? c.y : c.x; };

    std::optional<Coord> tab_lo, tab_hi;
    for (auto c : piece) {
        if (along(c) != cut) continue;
        if (!tab_lo || across(c) < across(*tab_lo)) tab_lo = c;
        if (!tab_hi || across(c) > across(*tab_hi)) tab_hi = c;
    }
    if (!tab_lo) return std::nullopt;
    JigsawCut j{Split{}, *tab_lo, *tab_hi};
    j.split.axis = axis;
    j.split.index = cut;
    for (auto c : piece) {
        const bool first = along(c) < cut || c == *tab_lo || c == *tab_hi;
        (first ? j.split.first : j.split.second).insert(c);
    }
    if (!connected(j.split.first) || !connected(j.split.second)) return std::nullopt;
    j.split.edges = cut_edges(j.split.first, j.split.second);
    return j;
}

std::pair<int, int> extent(const CellSet& piece, CutAxis axis) {
    auto along = [&](Coord c) { return axis == CutAxis::Vertical ? c.x : c.y; };
    int lo = along(*piece.begin()), hi = lo;
    for (auto c : piece) lo = std::min(lo, along(c)), hi = std::max(hi, along(c));
    return {lo, hi};
}

std::optional<JigsawCut> jigsaw_cut(const CellSet& piece, CutAxis axis) {
    const auto [lo, hi] = extent(piece, axis);
    const int m = hi - lo + 1;
    if (m <= 3) return std::nullopt;
    return jigsaw_cut_at(piece, axis, lo + (m + 1) / 2 - 1);
}

// As jigsaw_cut, falling back to the nearest interior line whose halves stay connected. A piece
// whose bottom row is only a protrusion cannot be cut on its second row.
std::optional<JigsawCut> nearest_jigsaw_cut(const CellSet& piece, CutAxis axis) {
    const auto [lo, hi] = extent(piece, axis);
    const int m = hi - lo + 1;
    if (m <= 3) return std::nullopt;
    const int mid = lo + (m + 1) / 2 - 1;
    for (int d = 0; d < m; ++d)
        for (int cut : {mid + d, mid - d})
            if (cut > lo && cut < hi)
                if (auto j = jigsaw_cut_at(piece, axis, cut)) return j;
    return std::nullopt;
}

int third(int a, int b) {
    for (int t = 0;; ++t)
        if (t != a && t != b) return t;
}

bool horizontal_edge(const Edge& e) { return e.side == Side::East || e.side == Side::West; }

bool touches(const Edge& e, Coord c) { return e.cell == c || e.cell + step(e.side) == c; }

}  // namespace detail

StagedSystem gen_square_jigsaw(int n) {
    if (n < 2) throw ConstructionError(ConstructionErrorKind::InvalidSize, "square side must be >= 2");
    detail::CellSet cells;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) cells.insert({x, y});
    std::vector<std::string> pool;
    for (int i = 1; i <= 9; ++i) pool.push_back("j" + std::to_string(i));
    return compile_tree(detail::Builder(cells, pool).run(cells), "square_jigsaw_" + std::to_string(n));
}

}  // namespace sasm
