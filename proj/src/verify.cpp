#include "sasm/verify.hpp"

#include <algorithm>
#include <deque>

namespace sasm {

bool is_fully_connected(const Supertile& s, const TileSet& tiles) {
    for (const auto& c : s.cells()) {
        for (Side side : {Side::North, Side::East}) {
            auto other = s.at(c.pos + step(side));
            if (!other) continue;
            if (tiles.bond(tiles.side_glue(c.tile, side), tiles.side_glue(*other, opposite(side))) < 1)
                return false;
        }
    }
    return true;
}

bool is_planar_attachment(const AttachmentEvent& e) {
    const Supertile& left = e.left;
    const Supertile& right = e.right;

    int rx0 = e.offset.x, ry0 = e.offset.y;
    const int rx1 = rx0 + right.width() - 1, ry1 = ry0 + right.height() - 1;

    // Displacements are searched in a window large enough for the right piece to clear the left
    // piece's bounding box in any direction.
    const int span_x = left.width() + right.width() + 2;
    const int span_y = left.height() + right.height() + 2;
    const int nx = 2 * span_x + 1, ny = 2 * span_y + 1;
    auto slot = [&](int dx, int dy) { return (dy + span_y) * nx + (dx + span_x); };

    std::vector<char> blocked(static_cast<std::size_t>(nx) * ny, 0);
    for (const auto& l : left.cells()) {
        for (const auto& r : right.cells()) {
            const int dx = l.pos.x - (r.pos.x + e.offset.x);
            const int dy = l.pos.y - (r.pos.y + e.offset.y);
            if (std::abs(dx) <= span_x && std::abs(dy) <= span_y) blocked[slot(dx, dy)] = 1;
        }
    }
    if (blocked[slot(0, 0)]) return false;

    auto separated = [&](int dx, int dy) {
        return rx1 + dx < 0 || rx0 + dx > left.width() - 1 || ry1 + dy < 0 || ry0 + dy > left.height() - 1;
    };

    std::vector<char> seen(blocked.size(), 0);
    std::deque<Coord> queue{{0, 0}};
    seen[slot(0, 0)] = 1;
    while (!queue.empty()) {
        const Coord d = queue.front();
        queue.pop_front();
        if (separated(d.x, d.y)) return true;
        for (Side s : kSides) {
            const Coord n = d + step(s);
            if (std::abs(n.x) > span_x || std::abs(n.y) > span_y) continue;
            const int k = slot(n.x, n.y);
            if (seen[k] || blocked[k]) continue;
            seen[k] = 1;
            queue.push_back(n);
        }
    }
    return false;
}

bool is_planar_system(std::span<const AttachmentEvent> trace) {
    return std::all_of(trace.begin(), trace.end(), [](const AttachmentEvent& e) { return is_planar_attachment(e); });
}

bool shape_equals(const Shape& a, const Shape& b, int scale) {
    if (scale < 1) return false;
    if (a.size() * static_cast<std::size_t>(scale) * scale != b.size()) return false;
    return a.scaled(scale) == b;
}

}  // namespace sasm
