#pragma once

#include <string>

#include "sasm/core.hpp"
#include "sasm/shape.hpp"

namespace sasm {

/// One character per cell, top row first: '#' for cells, '.' for gaps.
std::string render_ascii(const Shape& shape);

/// Like the shape rendering, but each cell shows the first character of its tile id when
/// `tile_initials` is set.
std::string render_ascii(const Supertile& s, const TileSet& tiles, bool tile_initials = false);

std::string render_svg(const Shape& shape);

/// Unit squares with the non-null glue label of every edge written just inside that edge.
std::string render_svg(const Supertile& s, const TileSet& tiles);

}  // namespace sasm
