#include <gtest/gtest.h>

#include <map>

#include "sasm/constructions.hpp"
#include "sasm/verify.hpp"
#include "sim_cases.hpp"

using namespace sasm;

namespace {

std::vector<Shape> terminal_shapes(const StagedSystem& sys) {
    const auto ex = execute(sys);
    EXPECT_EQ(ex.status, ExecutionStatus::Ok) << sys.name;
    std::vector<Shape> out;
    for (const auto& t : ex.terminals()) out.push_back(Shape::of(t));
    return out;
}

void expect_rejected(const TileSystem& t, ConstructionErrorKind kind) {
    try {
        gen_simulation(t);
        FAIL() << "expected " << to_string(kind);
    } catch (const ConstructionError& e) {
        EXPECT_EQ(e.kind(), kind);
    }
}

}  // namespace

TEST(Simulation, TerminalsAreScaledOriginals) {
    for (const auto& [name, t] : cases::simulation_systems()) {
        const int side = macro_block_side(t);
        const auto original = terminal_shapes(cases::one_stage(t));
        const auto macro = terminal_shapes(gen_simulation(t));
        ASSERT_EQ(original.size(), macro.size()) << name;
        for (const auto& o : original) {
            bool found = false;
            for (const auto& m : macro) found = found || shape_equals(o, m, side);
            EXPECT_TRUE(found) << name;
        }
    }
}

TEST(Simulation, ThreeGlues) {
    for (const auto& [name, t] : cases::simulation_systems())
        EXPECT_EQ(metrics(gen_simulation(t)).glue_count, 3) << name;
}

TEST(Simulation, BlockSideGrowsWithGlueCount) {
    EXPECT_EQ(macro_block_side(cases::rectangle_system(2, 1)), 8);   // 1 glue, 1 bit
    EXPECT_EQ(macro_block_side(cases::rectangle_system(2, 2)), 10);  // 4 glues, 2 bits
    EXPECT_EQ(macro_block_side(cases::rectangle_system(3, 2)), 12);  // 7 glues, 3 bits
}

TEST(Simulation, RejectsTemperatureTwo) {
    auto t = cases::rectangle_system(2, 1);
    t.temperature = 2;
    expect_rejected(t, ConstructionErrorKind::UnsupportedTemperature);
    auto s = cases::rectangle_system(2, 1);
    s.glues.declare("h0_0", 2);
    expect_rejected(s, ConstructionErrorKind::UnsupportedTemperature);
}

TEST(Simulation, RejectsSelfChainingTile) {
    expect_rejected(cases::tile_system({cases::tile("a", "", "x", "", "x")}), ConstructionErrorKind::InvalidSize);
}

TEST(Simulation, DifferentWordsNeverBond) {
    // Four labels give the four 2-bit words; facing faces with different words stay apart.
    const std::vector<std::string> labels{"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            std::vector<std::string> rest;
            for (int k = 0; k < 4; ++k)
                if (k != i && k != j) rest.push_back(labels[k]);
            const auto t = cases::tile_system({cases::tile("A", "", labels[i], "", ""), cases::tile("B", "", "", "", labels[j]),
                                               cases::tile("C", rest[0], "", "", ""), cases::tile("D", "", "", rest[1], "")});
            const auto ex = execute(gen_simulation(t));
            ASSERT_EQ(ex.status, ExecutionStatus::Ok);
            EXPECT_EQ(ex.terminals().size(), 4u) << labels[i] << " against " << labels[j];
        }
}

TEST(Simulation, BlockEnteringCornerIsNonplanar) {
    const auto t = cases::rectangle_system(2, 2);
    const auto sys = gen_simulation(t);
    const auto ex = execute(sys);
    ASSERT_TRUE(ex.unique());
    const int side = macro_block_side(t);
    const std::size_t block = static_cast<std::size_t>(side * side);
    const auto& bin = ex.find(sys.output.front())->result;
    const Supertile whole = ex.terminals().front();
    std::map<Coord, TileIndex> at;
    for (const auto& c : whole.cells()) at[c.pos] = c.tile;

    // Each three-block supertile sits in the square at some offset; the missing block enters the
    // corner it leaves.
    int corner_attachments = 0;
    for (const auto& three : bin.produced) {
        if (three.size() != 3 * block) continue;
        for (int ox = 0; ox <= whole.width() - three.width(); ++ox)
            for (int oy = 0; oy <= whole.height() - three.height(); ++oy) {
                const Coord o{ox, oy};
                bool fits = true;
                for (const auto& c : three.cells()) {
                    auto it = at.find(c.pos + o);
                    fits = fits && it != at.end() && it->second == c.tile;
                }
                if (!fits) continue;
                auto rest = at;
                for (const auto& c : three.cells()) rest.erase(c.pos + o);
                std::vector<Cell> cells;
                Coord lo = rest.begin()->first;
                for (const auto& [p, t] : rest) {
                    cells.push_back(Cell{p, t});
                    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
                }
                const AttachmentEvent e{three, Supertile::canonicalize(cells), lo - o, whole};
                ++corner_attachments;
                EXPECT_FALSE(is_planar_attachment(e));
            }
    }
    EXPECT_GT(corner_attachments, 0);

    // Two single blocks lock along one face by sliding straight in.
    int pairs = 0;
    for (std::size_t i = 0; i < bin.produced.size(); ++i) {
        if (!bin.witness[i] || bin.produced[i].size() != 2 * block) continue;
        const auto& w = *bin.witness[i];
        ++pairs;
        EXPECT_TRUE(is_planar_attachment({bin.produced[w.left], bin.produced[w.right], w.offset, bin.produced[i]}));
    }
    EXPECT_GT(pairs, 0);
}
