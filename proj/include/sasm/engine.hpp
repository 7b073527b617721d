#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sasm/core.hpp"
#include "sasm/shape.hpp"

namespace sasm {

/// Limits that keep closure computation finite; the produced set of a bin may be infinite.
struct ClosureBudget {
    std::size_t max_supertile_size = 10'000;
    std::size_t max_distinct_supertiles = 100'000;

    /// Default budget sized for a known target: 4 * |target| cells per supertile.
    static ClosureBudget for_target(std::size_t target_cells);
};

enum class BudgetDimension { None, SupertileSize, DistinctSupertiles };

/// How a produced supertile was first derived: produced[left] + produced[right] at offset.
struct Witness {
    std::size_t left = 0;
    std::size_t right = 0;
    Coord offset;
};

struct BinResult {
    /// P': sorted canonical supertiles.
    std::vector<Supertile> produced;
    /// Parallel to produced; empty for seeds.
    std::vector<std::optional<Witness>> witness;
    /// Indices into produced of P; only filled when complete.
    std::vector<std::size_t> terminal;
    bool complete = false;
    BudgetDimension exceeded = BudgetDimension::None;

    std::vector<Supertile> terminal_supertiles() const;
    std::optional<std::size_t> index_of(const Supertile& s) const;
};

/// Least fixed point of the seeds under pairwise combination at `temperature`.
BinResult produce_closure(std::span<const Supertile> seeds, int temperature, const TileSet& tiles,
                          const ClosureBudget& budget = {});

/// The closure is finite and has at least one terminal supertile.
bool unique_production(const BinResult& result);

/// Unique production with exactly one terminal whose cell set equals `target` up to translation.
bool uniquely_assembles_shape(const BinResult& result, const Shape& target);

}  // namespace sasm
