#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <stdexcept>

#include "sasm/constructions.hpp"
#include "jigsaw.hpp"

namespace sasm {

namespace detail {

namespace {

struct Candidate {
    Split split;
    MonotoneCutKind kind;
    int column;  // for jigsaw and elbow cuts, the column that is divided; otherwise the last left column
};

std::map<int, std::vector<int>> columns_of(const CellSet& piece) {
    std::map<int, std::vector<int>> cols;
    for (auto c : piece) cols[c.x].push_back(c.y);
    for (auto& [x, ys] : cols) std::sort(ys.begin(), ys.end());
    return cols;
}

// Rows y where (x, y) and (x + 1, y) are both in the piece.
std::vector<int> adjacent_rows(const CellSet& piece, int x) {
    std::vector<int> rows;
    for (auto c : piece)
        if (c.x == x && piece.contains({x + 1, c.y})) rows.push_back(c.y);
    std::sort(rows.begin(), rows.end());
    return rows;
}

std::optional<Split> make_split(const CellSet& piece, const std::function<bool(Coord)>& left, int column) {
    Split s;
    s.axis = CutAxis::Vertical;
    s.index = column;
    for (auto c : piece) (left(c) ? s.first : s.second).insert(c);
    if (s.first.empty() || s.second.empty() || !connected(s.first) || !connected(s.second)) return std::nullopt;
    s.edges = cut_edges(s.first, s.second);
    return s;
}

// Edges sorted top to bottom, east/west before north/south.
void order_edges(Split& s) {
    std::stable_sort(s.edges.begin(), s.edges.end(), [](const Edge& a, const Edge& b) {
        if (horizontal_edge(a) != horizontal_edge(b)) return horizontal_edge(a);
        return a.cell.y > b.cell.y;
    });
}

// Plain cuts and elbows carry at most three east/west edges, labelled top, middle and bottom of
// the triple; jigsaw cuts label by position relative to the tab.
void label(Candidate& cand, const std::vector<std::string>& pool, int t, int tab_lo, int tab_hi) {
    auto& s = cand.split;
    order_edges(s);
    s.labels.clear();
    std::vector<std::size_t> ew;
    for (std::size_t i = 0; i < s.edges.size(); ++i)
        if (horizontal_edge(s.edges[i])) ew.push_back(i);
    s.labels.assign(s.edges.size(), pool[6 + t]);
    if (cand.kind == MonotoneCutKind::JigsawTab) {
        for (auto i : ew) {
            const int y = s.edges[i].cell.y;
            s.labels[i] = pool[3 * t + (y > tab_hi ? 0 : y < tab_lo ? 2 : 1)];
        }
        return;
    }
    for (std::size_t k = 0; k < ew.size(); ++k) {
        int role = 1;
        if (ew.size() > 1) role = k == 0 ? 0 : k + 1 == ew.size() ? 2 : 1;
        s.labels[ew[k]] = pool[3 * t + role];
    }
}

class MonotoneBuilder : public Builder {
public:
    using Builder::Builder;
    std::vector<MonotoneCut> cuts;

protected:
    std::size_t vertical(const CellSet& piece, int left, int right) override {
        const auto [lo, hi] = extent(piece, CutAxis::Vertical);
        const int m = hi - lo + 1;
        if (m <= 3) return horizontal(piece, third(left, right), -1, -1);
        const int t = third(left, right);

        // Middle columns first, then outwards, in case the halves of a middle cut disconnect.
        const int mid = lo + (m - 1) / 2 - 1;
        for (int d = 0; d < m; ++d)
            for (int i : {mid - d, mid + d}) {
                if ((d == 0 && i != mid) || i < lo || i + 2 > hi) continue;
                for (auto& cand : candidates(piece, i)) {
                    label(cand, pool_, t, cand_tab_lo_, cand_tab_hi_);
                    if (!verify_split(cand.split, labels_) && !search_labels(cand.split)) continue;
                    cuts.push_back(MonotoneCut{cand.kind, cand.column});
                    const std::size_t node = commit(piece, cand.split);
                    const std::size_t a = vertical(cand.split.first, left, t);
                    const std::size_t b = vertical(cand.split.second, t, right);
                    tree_.nodes[node].children = {a, b};
                    return node;
                }
            }
        throw std::logic_error("no column cut assembles uniquely");
    }

private:
    // Cut options for middle columns i, i + 1, i + 2, most preferred first.
    std::vector<Candidate> candidates(const CellSet& piece, int i) {
        std::vector<Candidate> out;
        const auto left_rows = adjacent_rows(piece, i);
        const auto right_rows = adjacent_rows(piece, i + 1);
        auto plain = [&](int c) {
            if (auto s = make_split(piece, [c](Coord p) { return p.x <= c; }, c))
                out.push_back(Candidate{*s, MonotoneCutKind::Plain, c});
        };
        if (left_rows.size() <= 3) plain(i);
        if (right_rows.size() <= 3) plain(i + 1);
        if (!out.empty()) return out;

        std::vector<int> both;
        std::set_intersection(left_rows.begin(), left_rows.end(), right_rows.begin(), right_rows.end(),
                              std::back_inserter(both));
        if (both.size() >= 3) {
            // The cells adjacent to both sides, less their ends, become a tab of the right half.
            const int tab_lo = both.front() + 1, tab_hi = both.back() - 1;
            auto s = make_split(piece, [&](Coord p) {
                if (p.x != i + 1) return p.x <= i;
                return p.y < tab_lo || p.y > tab_hi;
            }, i + 1);
            if (s) {
                cand_tab_lo_ = tab_lo;
                cand_tab_hi_ = tab_hi;
                out.push_back(Candidate{*s, MonotoneCutKind::JigsawTab, i + 1});
            }
            return out;
        }

        // Elbow: the side whose contact with column i + 1 ends lower takes the column up to
        // the top of that contact.
        const bool left_lower = left_rows.back() < right_rows.back();
        const int top = left_lower ? left_rows.back() : right_rows.back();
        auto s = make_split(piece, [&](Coord p) {
            if (p.x != i + 1) return p.x <= i;
            return (p.y <= top) == left_lower;
        }, i + 1);
        if (s) out.push_back(Candidate{*s, MonotoneCutKind::Elbow, i + 1});
        return out;
    }

    int cand_tab_lo_ = 0, cand_tab_hi_ = 0;
};

struct Built {
    DecompositionTree tree;
    std::vector<MonotoneCut> cuts;
};

Built build(const Shape& shape) {
    const CellSet cells(shape.cells().begin(), shape.cells().end());
    for (const auto& [x, ys] : columns_of(cells))
        if (ys.back() - ys.front() + 1 != static_cast<int>(ys.size()))
            throw ConstructionError(ConstructionErrorKind::NotMonotone,
                                    "column " + std::to_string(x) + " is not a single run");
    std::vector<std::string> pool;
    for (int i = 1; i <= 9; ++i) pool.push_back("m" + std::to_string(i));
    MonotoneBuilder b(cells, pool);
    Built out;
    out.tree = b.run(cells);
    out.cuts = std::move(b.cuts);
    return out;
}

}  // namespace

}  // namespace detail

std::vector<MonotoneCut> monotone_cuts(const Shape& shape) { return detail::build(shape).cuts; }

StagedSystem gen_monotone(const Shape& shape) { return compile_tree(detail::build(shape).tree, "monotone"); }

}  // namespace sasm
