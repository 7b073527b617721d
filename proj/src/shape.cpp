#include "sasm/shape.hpp"

#include <algorithm>

namespace sasm {

Shape Shape::from_cells(std::vector<Coord> cells) {
    if (cells.empty()) throw AssemblyError(AssemblyErrorKind::EmptyInput, "shape has no cells");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (!is_connected(cells))
        throw AssemblyError(AssemblyErrorKind::DisconnectedCells, "shape is not 4-connected");
    int min_x = cells.front().x, min_y = cells.front().y, max_x = min_x, max_y = min_y;
    for (const auto& c : cells) {
        min_x = std::min(min_x, c.x);
        min_y = std::min(min_y, c.y);
        max_x = std::max(max_x, c.x);
        max_y = std::max(max_y, c.y);
    }
    for (auto& c : cells) c = c - Coord{min_x, min_y};
    Shape s;
    s.cells_ = std::move(cells);
    s.width_ = max_x - min_x + 1;
    s.height_ = max_y - min_y + 1;
    return s;
}

Shape Shape::of(const Supertile& st) {
    std::vector<Coord> cells;
    cells.reserve(st.size());
    for (const auto& c : st.cells()) cells.push_back(c.pos);
    return from_cells(std::move(cells));
}

Shape Shape::rectangle(int width, int height) {
    std::vector<Coord> cells;
    for (int x = 0; x < width; ++x)
        for (int y = 0; y < height; ++y) cells.push_back({x, y});
    return from_cells(std::move(cells));
}

bool Shape::contains(Coord c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

Shape Shape::scaled(int factor) const {
    std::vector<Coord> cells;
    cells.reserve(cells_.size() * factor * factor);
    for (const auto& c : cells_)
        for (int dx = 0; dx < factor; ++dx)
            for (int dy = 0; dy < factor; ++dy) cells.push_back({c.x * factor + dx, c.y * factor + dy});
    return from_cells(std::move(cells));
}

}  // namespace sasm
