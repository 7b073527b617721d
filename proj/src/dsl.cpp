#include "sasm/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace sasm {

std::string ParseDiagnostic::format() const {
    std::ostringstream os;
    os << line << ':' << column << ": " << (kind == ParseErrorKind::Syntax ? "syntax error" : "semantic error")
       << ": " << message;
    return os.str();
}

namespace {

struct Token {
    std::string text;
    int column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back(Token{std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return out;
}

bool is_ident(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    });
}

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

struct ListItem {
    std::string name;
    int column;
};

class Parser {
public:
    ParseResult run(std::string_view text) {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t end = std::min(text.find('\n', pos), text.size());
            std::string_view line = text.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_no;
            parse_line(line_no, tokenize(line));
            if (end == text.size()) break;
            pos = end + 1;
        }
        finish(line_no);
        ParseResult r;
        r.diagnostics = std::move(diags_);
        if (r.diagnostics.empty()) r.system = std::move(sys_);
        return r;
    }

private:
    StagedSystem sys_;
    std::vector<ParseDiagnostic> diags_;
    struct GlueUse {
        std::string label;
        int line, column;
    };
    std::vector<GlueUse> glue_uses_;
    struct TileUse {
        std::string id;
        int line, column;
    };
    std::vector<TileUse> tile_uses_;
    bool saw_system_ = false;
    bool saw_temperature_ = false;
    bool saw_output_ = false;
    std::map<std::string, int> glue_lines_;

    void syntax(int line, int col, std::string msg) {
        diags_.push_back(ParseDiagnostic{ParseErrorKind::Syntax, line, col, std::move(msg)});
    }
    void semantic(int line, int col, std::string msg) {
        diags_.push_back(ParseDiagnostic{ParseErrorKind::Semantic, line, col, std::move(msg)});
    }

    // Splits tokens [from, to) into a comma-separated identifier list.
    std::optional<std::vector<ListItem>> ident_list(int line, const std::vector<Token>& toks, std::size_t from,
                                                    std::size_t to, int fallback_col) {
        std::vector<ListItem> items;
        bool expect_item = true;
        for (std::size_t i = from; i < to; ++i) {
            const auto& tok = toks[i];
            std::size_t k = 0;
            while (k <= tok.text.size()) {
                const std::size_t comma = tok.text.find(',', k);
                const std::size_t stop = comma == std::string::npos ? tok.text.size() : comma;
                std::string piece = tok.text.substr(k, stop - k);
                if (!piece.empty()) {
                    if (!expect_item) {
                        syntax(line, tok.column + static_cast<int>(k), "expected ',' before '" + piece + "'");
                        return std::nullopt;
                    }
                    if (!is_ident(piece)) {
                        syntax(line, tok.column + static_cast<int>(k), "expected identifier, found '" + piece + "'");
                        return std::nullopt;
                    }
                    items.push_back(ListItem{piece, tok.column + static_cast<int>(k)});
                    expect_item = false;
                }
                if (comma == std::string::npos) break;
                if (expect_item) {
                    syntax(line, tok.column + static_cast<int>(comma), "expected identifier before ','");
                    return std::nullopt;
                }
                expect_item = true;
                k = comma + 1;
            }
        }
        if (items.empty() || expect_item) {
            syntax(line, fallback_col, "expected identifier list");
            return std::nullopt;
        }
        return items;
    }

    bool expect_count(int line, const std::vector<Token>& t, std::size_t n, const char* usage) {
        if (t.size() == n) return true;
        const int col = t.size() > n ? t[n].column : t.back().column + static_cast<int>(t.back().text.size());
        syntax(line, col, std::string("expected `") + usage + "`");
        return false;
    }

    void parse_line(int line, const std::vector<Token>& t) {
        if (t.empty()) return;
        const std::string& kw = t[0].text;
        if (kw == "system") {
            if (!expect_count(line, t, 2, "system <ident>")) return;
            if (!is_ident(t[1].text)) return syntax(line, t[1].column, "expected identifier");
            if (saw_system_) return semantic(line, t[0].column, "duplicate system header");
            saw_system_ = true;
            sys_.name = t[1].text;
        } else if (kw == "temperature") {
            if (!expect_count(line, t, 2, "temperature <int>")) return;
            auto v = parse_int(t[1].text);
            if (!v) return syntax(line, t[1].column, "expected integer");
            if (saw_temperature_) return semantic(line, t[0].column, "duplicate temperature");
            if (*v < 1) return semantic(line, t[1].column, "temperature must be positive");
            saw_temperature_ = true;
            sys_.temperature = *v;
        } else if (kw == "glue") {
            if (!expect_count(line, t, 4, "glue <ident> strength <int>")) return;
            if (!is_ident(t[1].text)) return syntax(line, t[1].column, "expected identifier");
            if (t[2].text != "strength") return syntax(line, t[2].column, "expected `strength`");
            auto v = parse_int(t[3].text);
            if (!v) return syntax(line, t[3].column, "expected integer");
            const std::string& label = t[1].text;
            if (label == kNullGlue) {
                if (*v != 0) semantic(line, t[3].column, "null glue must have strength 0");
                return;
            }
            if (*v < 1) return semantic(line, t[3].column, "glue '" + label + "' needs positive strength");
            if (glue_lines_.contains(label)) return semantic(line, t[1].column, "glue '" + label + "' declared twice");
            glue_lines_[label] = line;
            sys_.glues.declare(label, *v);
        } else if (kw == "tile") {
            if (t.size() < 2) return syntax(line, t[0].column, "expected `tile <ident> ...`");
            if (!is_ident(t[1].text)) return syntax(line, t[1].column, "expected identifier");
            Tile tile;
            tile.id = t[1].text;
            std::set<char> seen;
            for (std::size_t i = 2; i < t.size(); ++i) {
                const auto& tok = t[i].text;
                if (tok.size() < 3 || tok[1] != '=' || std::string_view("nesw").find(tok[0]) == std::string::npos)
                    return syntax(line, t[i].column, "expected side assignment n=, e=, s= or w=");
                const std::string glue = tok.substr(2);
                if (!is_ident(glue)) return syntax(line, t[i].column + 2, "expected glue identifier");
                if (!seen.insert(tok[0]).second)
                    return semantic(line, t[i].column, std::string("side '") + tok[0] + "' assigned twice");
                const int side = static_cast<int>(std::string_view("nesw").find(tok[0]));
                tile.glues[side] = glue;
                glue_uses_.push_back(GlueUse{glue, line, t[i].column + 2});
            }
            for (const auto& other : sys_.tiles)
                if (other.id == tile.id) return semantic(line, t[1].column, "tile '" + tile.id + "' declared twice");
            sys_.tiles.push_back(std::move(tile));
        } else if (kw == "stage") {
            if (!expect_count(line, t, 2, "stage <int>")) return;
            auto v = parse_int(t[1].text);
            if (!v) return syntax(line, t[1].column, "expected integer");
            if (*v != sys_.stage_count() + 1)
                return semantic(line, t[1].column,
                                "expected stage " + std::to_string(sys_.stage_count() + 1) + ", found " + t[1].text);
            if (saw_output_) return semantic(line, t[0].column, "stage after output declaration");
            sys_.stages.emplace_back();
        } else if (kw == "bin") {
            parse_bin(line, t);
        } else if (kw == "output") {
            if (t.size() < 2) return syntax(line, t[0].column, "expected `output <ident>{,<ident>}`");
            if (saw_output_) return semantic(line, t[0].column, "duplicate output declaration");
            auto items = ident_list(line, t, 1, t.size(), t[0].column);
            if (!items) return;
            saw_output_ = true;
            const auto& last = sys_.stages.empty() ? std::vector<BinDecl>{} : sys_.stages.back();
            for (const auto& it : *items) {
                const bool known = std::any_of(last.begin(), last.end(), [&](const BinDecl& b) { return b.name == it.name; });
                if (!known) {
                    semantic(line, it.column, "output references undeclared bin '" + it.name + "'");
                    continue;
                }
                sys_.output.push_back(BinRef{sys_.stage_count(), it.name});
            }
        } else {
            syntax(line, t[0].column, "unknown keyword '" + kw + "'");
        }
    }

    void parse_bin(int line, const std::vector<Token>& t) {
        if (t.size() < 2) return syntax(line, t[0].column, "expected `bin <ident>`");
        if (!is_ident(t[1].text) || t[1].text == "from" || t[1].text == "add")
            return syntax(line, t[1].column, "expected bin identifier");
        if (sys_.stages.empty()) return semantic(line, t[0].column, "bin declared before any stage");
        if (saw_output_) return semantic(line, t[0].column, "bin after output declaration");
        BinDecl bin;
        bin.name = t[1].text;
        std::size_t i = 2;
        bool had_from = false, had_add = false;
        while (i < t.size()) {
            const std::string& kw = t[i].text;
            if (kw != "from" && kw != "add") return syntax(line, t[i].column, "expected `from` or `add`");
            if ((kw == "from" && (had_from || had_add)) || (kw == "add" && had_add))
                return syntax(line, t[i].column, "unexpected `" + kw + "`");
            std::size_t j = i + 1;
            while (j < t.size() && t[j].text != "from" && t[j].text != "add") ++j;
            auto items = ident_list(line, t, i + 1, j, t[i].column + static_cast<int>(kw.size()) + 1);
            if (!items) return;
            const int stage = sys_.stage_count();
            for (const auto& it : *items) {
                if (kw == "from") {
                    if (stage == 1) {
                        semantic(line, it.column, "stage 1 bins cannot have predecessors");
                        continue;
                    }
                    const auto& prev = sys_.stages[stage - 2];
                    const bool known = std::any_of(prev.begin(), prev.end(), [&](const BinDecl& b) { return b.name == it.name; });
                    if (!known) {
                        semantic(line, it.column, "bin '" + it.name + "' is not declared in stage " + std::to_string(stage - 1));
                        continue;
                    }
                    bin.from.push_back(BinRef{stage - 1, it.name});
                } else {
                    tile_uses_.push_back(TileUse{it.name, line, it.column});
                    bin.add.push_back(it.name);
                }
            }
            (kw == "from" ? had_from : had_add) = true;
            i = j;
        }
        auto& stage_bins = sys_.stages.back();
        if (std::any_of(stage_bins.begin(), stage_bins.end(), [&](const BinDecl& b) { return b.name == bin.name; }))
            return semantic(line, t[1].column, "bin '" + bin.name + "' declared twice in stage");
        stage_bins.push_back(std::move(bin));
    }

    void finish(int last_line) {
        for (const auto& use : glue_uses_)
            if (use.label != kNullGlue && !sys_.glues.contains(use.label))
                semantic(use.line, use.column, "undeclared glue '" + use.label + "'");
        for (const auto& use : tile_uses_) {
            const bool known = std::any_of(sys_.tiles.begin(), sys_.tiles.end(), [&](const Tile& tl) { return tl.id == use.id; });
            if (!known) semantic(use.line, use.column, "undeclared tile '" + use.id + "'");
        }
        for (const auto& [label, line] : glue_lines_)
            if (sys_.glues.strength(label) > sys_.temperature)
                semantic(line, 1, "glue '" + label + "' is stronger than the temperature");
        if (!sys_.stages.empty() && !saw_output_)
            semantic(last_line, 1, "missing output declaration");
        std::stable_sort(diags_.begin(), diags_.end(), [](const ParseDiagnostic& a, const ParseDiagnostic& b) {
            return std::tie(a.line, a.column) < std::tie(b.line, b.column);
        });
    }
};

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i];
    }
    return out;
}

}  // namespace

ParseResult parse_system(std::string_view text) { return Parser().run(text); }

std::string serialize_system(const StagedSystem& system) {
    std::ostringstream os;
    os << "system " << system.name << '\n';
    os << "temperature " << system.temperature << '\n';
    for (const auto& label : system.glues.labels())
        os << "glue " << label << " strength " << system.glues.strength(label) << '\n';
    std::vector<const Tile*> tiles;
    for (const auto& t : system.tiles) tiles.push_back(&t);
    std::sort(tiles.begin(), tiles.end(), [](const Tile* a, const Tile* b) { return a->id < b->id; });
    for (const Tile* t : tiles) {
        os << "tile " << t->id;
        for (Side s : kSides)
            if (t->glue(s) != kNullGlue) os << ' ' << "nesw"[static_cast<int>(s)] << '=' << t->glue(s);
        os << '\n';
    }
    for (int i = 1; i <= system.stage_count(); ++i) {
        os << "stage " << i << '\n';
        std::vector<const BinDecl*> bins;
        for (const auto& b : system.stages[i - 1]) bins.push_back(&b);
        std::sort(bins.begin(), bins.end(), [](const BinDecl* a, const BinDecl* b) { return a->name < b->name; });
        for (const BinDecl* b : bins) {
            os << "bin " << b->name;
            std::vector<std::string> from;
            for (const auto& r : b->from) from.push_back(r.name);
            std::sort(from.begin(), from.end());
            if (!from.empty()) os << " from " << join(from);
            std::vector<std::string> add = b->add;
            std::sort(add.begin(), add.end());
            if (!add.empty()) os << " add " << join(add);
            os << '\n';
        }
    }
    if (!system.output.empty()) {
        std::vector<std::string> out;
        for (const auto& r : system.output) out.push_back(r.name);
        std::sort(out.begin(), out.end());
        os << "output " << join(out) << '\n';
    }
    return os.str();
}

ShapeParseResult parse_shape(std::string_view text) {
    ShapeParseResult r;
    std::vector<std::string> rows;
    std::size_t pos = 0;
    int line_no = 0;
    std::vector<int> row_lines;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string line(text.substr(pos, end - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_no;
        if (!line.empty()) {
            rows.push_back(line);
            row_lines.push_back(line_no);
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    std::vector<Coord> cells;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size()) {
            r.diagnostics.push_back({ParseErrorKind::Syntax, row_lines[i], 1, "rows must all have the same length"});
            return r;
        }
        for (std::size_t x = 0; x < rows[i].size(); ++x) {
            const char c = rows[i][x];
            if (c == '#') {
                cells.push_back({static_cast<int>(x), static_cast<int>(rows.size() - 1 - i)});
            } else if (c != '.') {
                r.diagnostics.push_back({ParseErrorKind::Syntax, row_lines[i], static_cast<int>(x) + 1,
                                         std::string("unexpected character '") + c + "'"});
                return r;
            }
        }
    }
    if (cells.empty()) {
        r.diagnostics.push_back({ParseErrorKind::Semantic, 1, 1, "shape has no '#' cells"});
        return r;
    }
    if (!is_connected(cells)) {
        r.diagnostics.push_back({ParseErrorKind::Semantic, 1, 1, "shape is not 4-connected"});
        return r;
    }
    r.shape = Shape::from_cells(std::move(cells));
    return r;
}

std::string serialize_shape(const Shape& shape) {
    std::string out;
    for (int y = shape.height() - 1; y >= 0; --y) {
        for (int x = 0; x < shape.width(); ++x) out += shape.contains({x, y}) ? '#' : '.';
        out += '\n';
    }
    return out;
}

}  // namespace sasm
