#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sasm/shape.hpp"
#include "sasm/staged.hpp"

namespace sasm {

enum class ParseErrorKind { Syntax, Semantic };

struct ParseDiagnostic {
    ParseErrorKind kind = ParseErrorKind::Syntax;
    int line = 0;
    int column = 0;
    std::string message;

    std::string format() const;
};

struct ParseResult {
    std::optional<StagedSystem> system;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return system.has_value(); }
};

/// Line-oriented system format:
///
///     system <ident>
///     temperature <int>
///     glue <ident> strength <int>
///     tile <ident> n=<glue> e=<glue> s=<glue> w=<glue>   # omitted sides are null
///     stage <int>
///     bin <ident> [from <ident>{,<ident>}] [add <tile>{,<tile>}]
///     output <ident>{,<ident>}
///
/// `from` names bins of the previous stage; `output` names bins of the last stage.
ParseResult parse_system(std::string_view text);

/// Canonical text: declarations sorted by name, stages in order, null sides omitted.
std::string serialize_system(const StagedSystem& system);

struct ShapeParseResult {
    std::optional<Shape> shape;
    std::vector<ParseDiagnostic> diagnostics;
};

/// Rows of '#' (cell) and '.' (empty); the first line is the topmost row.
ShapeParseResult parse_shape(std::string_view text);
std::string serialize_shape(const Shape& shape);

}  // namespace sasm
