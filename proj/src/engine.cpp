#include "sasm/engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace sasm {

ClosureBudget ClosureBudget::for_target(std::size_t target_cells) {
    ClosureBudget b;
    b.max_supertile_size = std::max<std::size_t>(1, 4 * target_cells);
    return b;
}

std::vector<Supertile> BinResult::terminal_supertiles() const {
    std::vector<Supertile> out;
    out.reserve(terminal.size());
    for (std::size_t i : terminal) out.push_back(produced[i]);
    return out;
}

std::optional<std::size_t> BinResult::index_of(const Supertile& s) const {
    auto it = std::lower_bound(produced.begin(), produced.end(), s);
    if (it == produced.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - produced.begin());
}

BinResult produce_closure(std::span<const Supertile> seeds, int temperature, const TileSet& tiles,
                          const ClosureBudget& budget) {
    std::vector<Supertile> items;
    std::vector<std::optional<Witness>> witness;
    std::vector<char> grows;
    std::unordered_map<Supertile, std::size_t, SupertileHash> index;

    BinResult result;
    auto add = [&](Supertile s, std::optional<Witness> w) -> bool {
        if (index.contains(s)) return true;
        if (s.size() > budget.max_supertile_size) {
            result.exceeded = BudgetDimension::SupertileSize;
            return false;
        }
        if (items.size() + 1 > budget.max_distinct_supertiles) {
            result.exceeded = BudgetDimension::DistinctSupertiles;
            return false;
        }
        index.emplace(s, items.size());
        items.push_back(std::move(s));
        witness.push_back(w);
        grows.push_back(0);
        return true;
    };

    // Seeds in canonical order so the derivation order does not depend on the caller.
    std::vector<Supertile> sorted_seeds(seeds.begin(), seeds.end());
    std::sort(sorted_seeds.begin(), sorted_seeds.end());
    bool ok = true;
    for (auto& s : sorted_seeds) ok = ok && add(s, std::nullopt);

    // Semi-naive: item i is paired with every j <= i when it is dequeued.
    for (std::size_t i = 0; ok && i < items.size(); ++i) {
        for (std::size_t j = 0; ok && j <= i; ++j) {
            auto combos = combine_with_placements(items[i], items[j], temperature, tiles);
            if (combos.empty()) continue;
            grows[i] = grows[j] = 1;
            for (auto& c : combos) {
                if (!add(std::move(c.result), Witness{i, j, c.offset})) {
                    ok = false;
                    break;
                }
            }
        }
    }

    // Reorder canonically and remap witness indices.
    std::vector<std::size_t> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return items[a] < items[b]; });
    std::vector<std::size_t> rank(items.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

    result.complete = ok;
    result.produced.reserve(items.size());
    result.witness.reserve(items.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        const std::size_t i = order[r];
        result.produced.push_back(items[i]);
        auto w = witness[i];
        if (w) w = Witness{rank[w->left], rank[w->right], w->offset};
        result.witness.push_back(w);
        if (ok && !grows[i]) result.terminal.push_back(r);
    }
    return result;
}

bool unique_production(const BinResult& result) { return result.complete && !result.terminal.empty(); }

bool uniquely_assembles_shape(const BinResult& result, const Shape& target) {
    if (!unique_production(result) || result.terminal.size() != 1) return false;
    return Shape::of(result.produced[result.terminal.front()]) == target;
}

}  // namespace sasm
