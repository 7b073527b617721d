#include "sasm/constructions.hpp"

#include <bit>

namespace sasm {

namespace {

constexpr std::array<char, 3> kLineGlues{'a', 'b', 'c'};

char third(char p, char q) {
    for (char g : kLineGlues)
        if (g != p && g != q) return g;
    return '?';
}

std::string pair_name(char l, char r) { return std::string{l, r}; }

StagedSystem line_base(const std::string& name) {
    StagedSystem sys;
    sys.name = name;
    sys.temperature = 1;
    for (char g : kLineGlues) sys.glues.declare(std::string(1, g), 1);
    for (char l : kLineGlues)
        for (char r : kLineGlues)
            if (l != r) sys.tiles.push_back(Tile{pair_name(l, r), {"null", std::string(1, r), "null", std::string(1, l)}});
    return sys;
}

// Stages 1..levels+1 hold every 1x2^j line (j = stage - 1) for all six ordered end-glue pairs,
// bin "LR" having west glue L and east glue R.
void add_line_levels(StagedSystem& sys, int levels) {
    for (int stage = 1; stage <= levels + 1; ++stage) {
        std::vector<BinDecl> bins;
        for (char l : kLineGlues) {
            for (char r : kLineGlues) {
                if (l == r) continue;
                BinDecl b;
                b.name = pair_name(l, r);
                if (stage == 1) {
                    b.add = {pair_name(l, r)};
                } else {
                    const char m = third(l, r);
                    b.from = {BinRef{stage - 1, pair_name(l, m)}, BinRef{stage - 1, pair_name(m, r)}};
                }
                bins.push_back(b);
            }
        }
        sys.stages.push_back(bins);
    }
}

}  // namespace

StagedSystem line10_system() {
    StagedSystem sys;
    sys.name = "line10";
    for (const char* g : {"a", "b", "c"}) sys.glues.declare(g, 1);
    sys.tiles = {Tile{"t1", {"null", "b", "null", "a"}}, Tile{"t2", {"null", "c", "null", "b"}},
                 Tile{"t3", {"null", "a", "null", "c"}}};
    sys.stages = {{BinDecl{"ab", {}, {"t1", "t2"}}, BinDecl{"ca", {}, {"t1", "t3"}}},
                  {BinDecl{"mid", {{1, "ab"}, {1, "ca"}}, {}}},
                  {BinDecl{"left", {{2, "mid"}}, {"t2"}}, BinDecl{"right", {{2, "mid"}}, {"t3"}}}};
    sys.output = {{3, "left"}, {3, "right"}};
    return sys;
}

StagedSystem gen_line_pow2(int k) {
    if (k < 0) throw ConstructionError(ConstructionErrorKind::InvalidSize, "line exponent must be >= 0");
    auto sys = line_base("line_pow2_" + std::to_string(k));
    add_line_levels(sys, k);
    sys.output = {BinRef{k + 1, "ab"}};
    return prune_unused(std::move(sys));
}

StagedSystem gen_line(int n) {
    if (n < 1) throw ConstructionError(ConstructionErrorKind::InvalidSize, "line length must be >= 1");
    const unsigned u = static_cast<unsigned>(n);
    const int top = std::bit_width(u) - 1;
    auto sys = line_base("line_" + std::to_string(n));
    add_line_levels(sys, top);
    if (std::has_single_bit(u)) {
        sys.output = {BinRef{top + 1, "ab"}};
        return prune_unused(std::move(sys));
    }
    // The accumulator collects set bits from low to high; each new power-of-two piece joins on
    // its west end. Its end glues always differ so it cannot bond to itself.
    sys.stages.emplace_back();
    const int low = std::countr_zero(u);
    char acc_l = 'a', acc_r = 'b';
    for (int j = low; j <= top; ++j) {
        const int stage = j + 2;  // pieces of length 2^j are terminal in stage j + 1
        BinDecl acc;
        acc.name = "acc";
        if (j == low) {
            acc.from = {BinRef{j + 1, pair_name(acc_l, acc_r)}};
        } else if (u & (1u << j)) {
            const char x = third(acc_l, acc_r);
            acc.from = {BinRef{stage - 1, "acc"}, BinRef{j + 1, pair_name(x, acc_l)}};
            acc_l = x;
        } else {
            acc.from = {BinRef{stage - 1, "acc"}};
        }
        sys.stages[stage - 1].push_back(acc);
    }
    sys.output = {BinRef{top + 2, "acc"}};
    return prune_unused(std::move(sys));
}

}  // namespace sasm
