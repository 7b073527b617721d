#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "sasm/constructions.hpp"

namespace sasm {

namespace {

struct Strip {
    int y = 0, x0 = 0, x1 = 0;  // unscaled row and column range
    int parent = -1;
    int depth = 0;
};

struct Link {
    int lower = 0, upper = 0;
    int l = 0, r = 0;  // unscaled overlap
};

std::string q(int i) { return "q" + std::to_string(i); }

int mod3(int v) { return ((v % 3) + 3) % 3; }

// Glue on the edge between scaled columns x and x + 1 at row y inside one strip: the columns
// alternate between the glue sets q1..q3 and q4..q6, chosen by row.
std::string column_glue(int x, int y) { return q(1 + mod3(y) + (x % 2 == 0 ? 3 : 0)); }

class Scale2 {
public:
    explicit Scale2(const Shape& shape) {
        std::map<int, std::vector<int>> rows;
        for (auto c : shape.cells()) rows[c.y].push_back(c.x);
        for (auto& [y, xs] : rows) {
            std::sort(xs.begin(), xs.end());
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (i == 0 || xs[i] != xs[i - 1] + 1) strips_.push_back(Strip{y, xs[i], xs[i]});
                else strips_.back().x1 = xs[i];
            }
        }
        for (int a = 0; a < static_cast<int>(strips_.size()); ++a)
            for (int b = 0; b < static_cast<int>(strips_.size()); ++b) {
                const auto &s = strips_[a], &t = strips_[b];
                if (t.y != s.y + 1) continue;
                const int l = std::max(s.x0, t.x0), r = std::min(s.x1, t.x1);
                if (l <= r) links_.push_back(Link{a, b, l, r});
            }
        if (links_.size() + 1 != strips_.size())
            throw ConstructionError(ConstructionErrorKind::NotSimplyConnected, "strip graph contains a cycle");
        root_tree();
        assign_cells();
        assign_labels();
    }

    StagedSystem build() {
        StagedSystem sys;
        sys.name = "scale2";
        sys.temperature = 1;
        std::set<std::string> used;
        for (const auto& [c, quad] : labels_)
            for (const auto& l : quad)
                if (l != kNullGlue) used.insert(l);
        for (const auto& l : used) sys.glues.declare(l, 1);
        std::map<std::array<std::string, 4>, std::string> ids;
        for (const auto& [c, quad] : labels_) ids.emplace(quad, "");
        int next = 0;
        for (auto& [quad, id] : ids) {
            id = "t" + std::to_string(next++);
            sys.tiles.push_back(Tile{id, quad});
        }
        tile_id_ = [&ids, this](Coord c) { return ids.at(labels_.at(c)); };

        const int root = 0;
        const int total = span(root);
        sys.stages.resize(total);
        place(sys, root, total);
        sys.output.push_back(BinRef{total, primary(root, static_cast<int>(events(root).size()))});
        return sys;
    }

private:
    void root_tree() {
        std::vector<std::vector<int>> adj(strips_.size());
        for (int i = 0; i < static_cast<int>(links_.size()); ++i) {
            adj[links_[i].lower].push_back(i);
            adj[links_[i].upper].push_back(i);
        }
        std::vector<bool> seen(strips_.size());
        std::deque<int> queue{0};
        seen[0] = true;
        while (!queue.empty()) {
            const int s = queue.front();
            queue.pop_front();
            for (int li : adj[s]) {
                const int o = links_[li].lower == s ? links_[li].upper : links_[li].lower;
                if (seen[o]) continue;
                seen[o] = true;
                strips_[o].parent = s;
                strips_[o].depth = strips_[s].depth + 1;
                queue.push_back(o);
            }
        }
    }

    // Scaled cells. A link's tab is the lower strip's top row strictly inside the scaled overlap;
    // it belongs to the upper strip, so the lower strip walls it in on both sides.
    void assign_cells() {
        for (int s = 0; s < static_cast<int>(strips_.size()); ++s)
            for (int x = 2 * strips_[s].x0; x <= 2 * strips_[s].x1 + 1; ++x)
                for (int y : {2 * strips_[s].y, 2 * strips_[s].y + 1}) owner_[{x, y}] = s;
        for (int i = 0; i < static_cast<int>(links_.size()); ++i) {
            const auto& k = links_[i];
            for (int x = 2 * k.l + 1; x <= 2 * k.r; ++x) owner_[{x, 2 * strips_[k.lower].y + 1}] = k.upper;
            link_of_[{std::min(k.lower, k.upper), std::max(k.lower, k.upper)}] = i;
        }
    }

    int parent_of(const Link& k) const { return strips_[k.upper].parent == k.lower ? k.lower : k.upper; }

    // A link's horizontal edges take an end glue on each side and a floor glue between them.
    // The three glues depend on the parity of the parent's depth and on whether the child
    // lies above or below the parent, so links that can be exposed at the same time never
    // share a glue.
    std::string cross_label(Coord a, Coord b) const {
        const int sa = owner_.at(a), sb = owner_.at(b);
        const auto& k = links_[link_of_.at({std::min(sa, sb), std::max(sa, sb)})];
        const bool odd = strips_[parent_of(k)].depth % 2 == 1;
        const bool child_above = parent_of(k) == k.lower;
        if (a.x == b.x) {
            const int base = 1 + 3 * ((odd ? 2 : 0) + (child_above ? 0 : 1));
            if (a.x == 2 * k.l) return q(base);
            if (a.x == 2 * k.r + 1) return q(base + 2);
            return q(base + 1);
        }
        // Tab walls: links below an even-depth parent follow the column glues. The others use
        // q7 and q8, swapped between links above and below the parent so that a wall of one
        // cannot meet a wall of the other two rows away.
        const int x = std::min(a.x, b.x);
        if (!odd) return column_glue(x, a.y);
        const bool left = x == 2 * k.l;
        return q(left == child_above ? 7 : 8);
    }

    void assign_labels() {
        for (const auto& [c, s] : owner_) {
            auto& quad = labels_[c];
            quad.fill(std::string(kNullGlue));
            for (Side side : kSides) {
                const Coord n = c + step(side);
                auto it = owner_.find(n);
                if (it == owner_.end()) continue;
                if (it->second != s) quad[static_cast<int>(side)] = cross_label(c, n);
                else if (side == Side::East || side == Side::West) quad[static_cast<int>(side)] = column_glue(std::min(c.x, n.x), c.y);
            }
        }
        // Inside a column the vertical edges take glues that differ from each other and from the
        // column's top and bottom glues.
        std::map<std::pair<int, int>, std::vector<Coord>> columns;
        for (const auto& [c, s] : owner_) columns[{s, c.x}].push_back(c);
        for (auto& [key, cells] : columns) {
            std::sort(cells.begin(), cells.end(), [](Coord a, Coord b) { return a.y < b.y; });
            std::set<std::string> avoid{labels_[cells.front()][static_cast<int>(Side::South)],
                                        labels_[cells.back()][static_cast<int>(Side::North)]};
            int g = 1;
            for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
                while (avoid.contains(q(g))) ++g;
                labels_[cells[i]][static_cast<int>(Side::North)] = q(g);
                labels_[cells[i + 1]][static_cast<int>(Side::South)] = q(g);
                avoid.insert(q(g));
            }
        }
        columns_ = std::move(columns);
    }

    struct Event {
        int column = 0;  // scaled column added, or
        int child = -1;  // child subtree mixed in
    };

    // Columns left to right; each child subtree is mixed in on its own step right after the
    // strip gains the last column of their shared tab or pocket.
    const std::vector<Event>& events(int s) {
        if (auto it = events_.find(s); it != events_.end()) return it->second;
        std::vector<Event> out;
        std::map<int, std::vector<int>> after;
        for (const auto& k : links_) {
            const int child = k.lower == s ? k.upper : k.upper == s ? k.lower : -1;
            if (child < 0 || strips_[child].parent != s) continue;
            after[2 * k.r + 1].push_back(child);
        }
        for (int x = 2 * strips_[s].x0; x <= 2 * strips_[s].x1 + 1; ++x) {
            out.push_back(Event{x, -1});
            for (int c : after[x]) out.push_back(Event{0, c});
        }
        return events_[s] = std::move(out);
    }

    int span(int s) {
        const auto& ev = events(s);
        int start = 1;
        for (int j = 1; j <= static_cast<int>(ev.size()); ++j)
            if (ev[j - 1].child >= 0) start = std::max(start, span(ev[j - 1].child) - j + 2);
        return start + static_cast<int>(ev.size()) - 1;
    }

    static std::string primary(int s, int j) { return "p" + std::to_string(s) + "_" + std::to_string(j); }

    void place(StagedSystem& sys, int s, int last) {
        const auto ev = events(s);
        const int n = static_cast<int>(ev.size());
        for (int j = 1; j <= n; ++j) {
            const int stage = last - (n - j);
            BinDecl bin;
            bin.name = primary(s, j);
            if (j > 1) bin.from.push_back(BinRef{stage - 1, primary(s, j - 1)});
            if (ev[j - 1].child >= 0) {
                const int c = ev[j - 1].child;
                place(sys, c, stage - 1);
                bin.from.push_back(BinRef{stage - 1, primary(c, static_cast<int>(events(c).size()))});
            } else {
                std::vector<std::string> tiles;
                for (auto c : columns_.at({s, ev[j - 1].column})) tiles.push_back(tile_id_(c));
                std::sort(tiles.begin(), tiles.end());
                tiles.erase(std::unique(tiles.begin(), tiles.end()), tiles.end());
                if (j == 1 || tiles.size() == 1) {
                    bin.add = tiles;
                } else {
                    BinDecl column;
                    column.name = "c" + std::to_string(s) + "_" + std::to_string(j);
                    column.add = tiles;
                    sys.stages[stage - 2].push_back(column);
                    bin.from.push_back(BinRef{stage - 1, column.name});
                }
            }
            sys.stages[stage - 1].push_back(bin);
        }
    }

    std::vector<Strip> strips_;
    std::vector<Link> links_;
    std::map<Coord, int> owner_;
    std::map<std::pair<int, int>, int> link_of_;
    CellLabels labels_;
    std::map<std::pair<int, int>, std::vector<Coord>> columns_;
    std::map<int, std::vector<Event>> events_;
    std::function<std::string(Coord)> tile_id_;
};

}  // namespace

StagedSystem gen_scale2(const Shape& shape) { return Scale2(shape).build(); }

}  // namespace sasm
