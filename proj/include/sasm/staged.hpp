#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sasm/core.hpp"
#include "sasm/engine.hpp"

namespace sasm {

/// A bin addressed by 1-based stage number and per-stage name.
struct BinRef {
    int stage = 1;
    std::string name;

    friend auto operator<=>(const BinRef&, const BinRef&) = default;
};

struct BinDecl {
    std::string name;
    /// Mix-graph edges into this bin (valid only from the previous stage).
    std::vector<BinRef> from;
    /// Tile ids added in this bin.
    std::vector<std::string> add;

    friend bool operator==(const BinDecl&, const BinDecl&) = default;
};

/// A mix graph with per-bin tile additions and one global temperature.
struct StagedSystem {
    std::string name = "system";
    int temperature = 1;
    GlueTable glues;
    std::vector<Tile> tiles;
    /// stages[i] holds the bins of stage i + 1.
    std::vector<std::vector<BinDecl>> stages;
    /// Edges into the output node; must reference last-stage bins.
    std::vector<BinRef> output;

    int stage_count() const { return static_cast<int>(stages.size()); }
    const BinDecl* find_bin(const BinRef& ref) const;
};

/// Order-insensitive structural equality (tiles, glues, bins, edges and additions compared as sets).
bool structurally_equal(const StagedSystem& a, const StagedSystem& b);

enum class DiagnosticKind {
    InvalidEdge,
    UnknownBin,
    UnknownGlue,
    UnknownTile,
    DuplicateName,
    InvalidStrength,
    InvalidTemperature,
    MissingOutput,
};

const char* to_string(DiagnosticKind kind);

struct Diagnostic {
    DiagnosticKind kind;
    /// 0 when the diagnostic is not tied to a stage.
    int stage = 0;
    std::string bin;
    std::string message;
};

std::vector<Diagnostic> validate(const StagedSystem& system);

struct Metrics {
    int glue_count = 0;
    int tile_count = 0;
    int bin_count = 0;
    int stage_count = 0;
    int temperature = 0;
};

Metrics metrics(const StagedSystem& system);

enum class ExecutionStatus { Ok, Invalid, Aborted };

struct BinRecord {
    BinRef ref;
    std::vector<BinRef> from;
    bool executed = false;
    BinResult result;
};

struct ExecutionResult {
    ExecutionStatus status = ExecutionStatus::Ok;
    TileSet tiles;
    std::vector<Diagnostic> diagnostics;
    /// Executed bins by stage, in declaration order.
    std::vector<std::vector<BinRecord>> stages;
    BinResult output;
    std::vector<BinRef> output_from;
    /// The first incomplete bin that feeds the output, when aborted.
    std::optional<BinRef> diverged;
    BudgetDimension diverged_dimension = BudgetDimension::None;

    const BinRecord* find(const BinRef& ref) const;
    bool unique() const { return status == ExecutionStatus::Ok && unique_production(output); }
    std::vector<Supertile> terminals() const { return output.terminal_supertiles(); }
};

ExecutionResult execute(const StagedSystem& system, const ClosureBudget& budget = {});

/// One combination step: `right` placed at `offset` relative to `left` gives `result`.
struct AttachmentEvent {
    Supertile left;
    Supertile right;
    Coord offset;
    Supertile result;
};

/// Attachment events of one derivation of `terminal` (an output terminal), following witnesses
/// back through earlier stages. Children precede parents.
std::vector<AttachmentEvent> witness_derivation(const ExecutionResult& execution, const Supertile& terminal);

}  // namespace sasm
