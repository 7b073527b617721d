#include "sasm/render.hpp"

#include <sstream>

namespace sasm {

namespace {

constexpr int kCell = 40;

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

void svg_open(std::ostringstream& os, int w, int h) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * kCell + 2 << "\" height=\"" << h * kCell + 2
       << "\" viewBox=\"-1 -1 " << w * kCell + 2 << ' ' << h * kCell + 2 << "\">\n";
}

void svg_square(std::ostringstream& os, int x, int y, int height) {
    os << "  <rect x=\"" << x * kCell << "\" y=\"" << (height - 1 - y) * kCell << "\" width=\"" << kCell
       << "\" height=\"" << kCell << "\" fill=\"#dde6f0\" stroke=\"#223\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string render_ascii(const Shape& shape) {
    std::string out;
    for (int y = shape.height() - 1; y >= 0; --y) {
        for (int x = 0; x < shape.width(); ++x) out += shape.contains({x, y}) ? '#' : '.';
        out += '\n';
    }
    return out;
}

std::string render_ascii(const Supertile& s, const TileSet& tiles, bool tile_initials) {
    std::string out;
    for (int y = s.height() - 1; y >= 0; --y) {
        for (int x = 0; x < s.width(); ++x) {
            auto t = s.at({x, y});
            if (!t) out += '.';
            else if (tile_initials && !tiles.tile(*t).id.empty()) out += tiles.tile(*t).id.front();
            else out += '#';
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const Shape& shape) {
    std::ostringstream os;
    svg_open(os, shape.width(), shape.height());
    for (const auto& c : shape.cells()) svg_square(os, c.x, c.y, shape.height());
    os << "</svg>\n";
    return os.str();
}

std::string render_svg(const Supertile& s, const TileSet& tiles) {
    std::ostringstream os;
    svg_open(os, s.width(), s.height());
    for (const auto& c : s.cells()) svg_square(os, c.pos.x, c.pos.y, s.height());
    for (const auto& c : s.cells()) {
        const int left = c.pos.x * kCell, top = (s.height() - 1 - c.pos.y) * kCell;
        for (Side side : kSides) {
            const GlueId g = tiles.side_glue(c.tile, side);
            if (g == kNullGlueId) continue;
            int tx = left + kCell / 2, ty = top + kCell / 2 + 3;
            switch (side) {
            case Side::North: ty = top + 10; break;
            case Side::South: ty = top + kCell - 4; break;
            case Side::East: tx = left + kCell - 7; break;
            case Side::West: tx = left + 7; break;
            }
            os << "  <text x=\"" << tx << "\" y=\"" << ty
               << "\" font-size=\"8\" text-anchor=\"middle\" font-family=\"monospace\">"
               << escape(tiles.glue_label(g)) << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace sasm
