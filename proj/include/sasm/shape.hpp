#pragma once

#include <span>
#include <vector>

#include "sasm/core.hpp"

namespace sasm {

/// A nonempty 4-connected set of grid cells, translated so min x and min y are 0.
class Shape {
public:
    /// Throws AssemblyError (EmptyInput / DisconnectedCells) on invalid input.
    static Shape from_cells(std::vector<Coord> cells);
    static Shape of(const Supertile& s);
    static Shape rectangle(int width, int height);

    std::span<const Coord> cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    int width() const { return width_; }
    int height() const { return height_; }
    bool contains(Coord c) const;

    /// Each cell replaced by a factor x factor block.
    Shape scaled(int factor) const;

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    Shape() = default;
    std::vector<Coord> cells_;
    int width_ = 0;
    int height_ = 0;
};

}  // namespace sasm
