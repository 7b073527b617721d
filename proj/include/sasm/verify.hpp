#pragma once

#include <span>

#include "sasm/core.hpp"
#include "sasm/shape.hpp"
#include "sasm/staged.hpp"

namespace sasm {

/// Every pair of 4-adjacent tiles shares an equal, positive-strength glue on the abutting edges.
bool is_fully_connected(const Supertile& s, const TileSet& tiles);

/// The right piece can slide away from its attached position by unit axis-aligned translations
/// without ever overlapping the left piece. Rotation is never considered.
bool is_planar_attachment(const AttachmentEvent& event);

/// Every event of the given derivation is planar. The verdict covers this one derivation only.
bool is_planar_system(std::span<const AttachmentEvent> trace);

/// `b` equals `a` with every cell blown up to a scale x scale block, up to translation.
bool shape_equals(const Shape& a, const Shape& b, int scale = 1);

}  // namespace sasm
