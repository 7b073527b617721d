#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "check.hpp"
#include "oracle.hpp"
#include "random_cases.hpp"
#include "sasm/constructions.hpp"

using namespace sasm;

TEST(Lines, TranscribedLineOfTen) {
    auto sys = line10_system();
    auto o = check::run(sys, Shape::rectangle(10, 1));
    EXPECT_TRUE(o.shape_ok) << o.why;
    EXPECT_EQ(o.metrics.tile_count, 3);
    EXPECT_EQ(o.metrics.stage_count, 3);
    EXPECT_EQ(o.metrics.bin_count, 2);
}

TEST(Lines, PowersOfTwo) {
    for (int k = 0; k <= 5; ++k) {
        auto sys = gen_line_pow2(k);
        auto o = check::run(sys, Shape::rectangle(1 << k, 1));
        EXPECT_TRUE(o.shape_ok) << "k=" << k << ": " << o.why;
        EXPECT_TRUE(o.fully_connected);
        EXPECT_TRUE(o.planar);
        EXPECT_LE(o.metrics.glue_count, 3);
        EXPECT_LE(o.metrics.tile_count, 6);
        EXPECT_LE(o.metrics.bin_count, 6);
        EXPECT_EQ(o.metrics.stage_count, k + 1);
        EXPECT_TRUE(check::round_trips(sys));
    }
    EXPECT_EQ(metrics(gen_line_pow2(3)).glue_count, 3);
    EXPECT_EQ(metrics(gen_line_pow2(0)).stage_count, 1);
}

TEST(Lines, IntermediateEndGluesDiffer) {
    auto sys = gen_line_pow2(4);
    auto ex = execute(sys);
    ASSERT_EQ(ex.status, ExecutionStatus::Ok);
    for (const auto& stage : ex.stages) {
        for (const auto& rec : stage) {
            for (const auto& s : rec.result.terminal_supertiles()) {
                const auto& west = ex.tiles.tile(s.cells().front().tile).glue(Side::West);
                const auto& east = ex.tiles.tile(s.cells().back().tile).glue(Side::East);
                EXPECT_NE(west, east);
            }
        }
    }
}

TEST(Lines, ArbitraryLengths) {
    for (int n : {1, 2, 3, 10, 13, 31, 33}) {
        auto sys = gen_line(n);
        auto o = check::run(sys, Shape::rectangle(n, 1));
        EXPECT_TRUE(o.shape_ok) << "n=" << n << ": " << o.why;
        EXPECT_LE(o.metrics.bin_count, 7);
        EXPECT_LE(o.metrics.tile_count, 6);
    }
    EXPECT_LE(metrics(gen_line(13)).stage_count, 2 + 3);
    EXPECT_THROW(gen_line(0), ConstructionError);
}

TEST(Jigsaw, SmallSquares) {
    for (int n = 2; n <= 9; ++n) {
        auto sys = gen_square_jigsaw(n);
        auto o = check::run(sys, Shape::rectangle(n, n));
        EXPECT_TRUE(o.shape_ok) << "n=" << n << ": " << o.why;
        EXPECT_TRUE(o.fully_connected) << "n=" << n;
        EXPECT_TRUE(o.planar) << "n=" << n;
        EXPECT_LE(o.metrics.glue_count, 9);
        EXPECT_EQ(o.metrics.temperature, 1);
        EXPECT_TRUE(check::round_trips(sys));
    }
    EXPECT_EQ(metrics(gen_square_jigsaw(16)).glue_count, 9);
    EXPECT_THROW(gen_square_jigsaw(1), ConstructionError);
}

TEST(Jigsaw, FourByFourInternalEdgesAllBond) {
    auto ex = execute(gen_square_jigsaw(4));
    ASSERT_TRUE(ex.unique());
    const auto s = ex.terminals().front();
    std::map<Coord, TileIndex> at;
    for (const auto& c : s.cells()) at[c.pos] = c.tile;
    int bonded = 0;
    for (const auto& [p, t] : at) {
        for (Side side : {Side::East, Side::North}) {
            auto it = at.find(p + step(side));
            if (it == at.end()) continue;
            const auto& a = ex.tiles.tile(t).glue(side);
            const auto& b = ex.tiles.tile(it->second).glue(opposite(side));
            EXPECT_EQ(a, b);
            EXPECT_NE(a, kNullGlue);
            if (a == b && a != kNullGlue) ++bonded;
        }
    }
    EXPECT_EQ(bonded, 24);
}

TEST(Jigsaw, OutputBinAgreesWithOracle) {
    auto sys = gen_square_jigsaw(4);
    auto ex = execute(sys);
    ASSERT_EQ(ex.status, ExecutionStatus::Ok);
    const auto& last = sys.stages.back();
    ASSERT_EQ(last.size(), 1u);
    std::vector<oracle::Cells> seeds;
    for (const auto& ref : last.front().from)
        for (const auto& t : ex.find(ref)->result.terminal_supertiles()) seeds.push_back(oracle::from(t));
    for (const auto& id : last.front().add) seeds.push_back(oracle::from(Supertile::single(*ex.tiles.find(id))));
    auto c = oracle::closure(seeds, 1, ex.tiles, 16);
    ASSERT_TRUE(c.bounded);
    const auto& engine = ex.find(BinRef{sys.stage_count(), last.front().name})->result;
    std::set<oracle::Cells> engine_terminal;
    for (const auto& t : engine.terminal_supertiles()) engine_terminal.insert(oracle::from(t));
    EXPECT_EQ(c.terminal, engine_terminal);
    ASSERT_EQ(c.terminal.size(), 1u);
    EXPECT_EQ(c.terminal.begin()->size(), 16u);
}

TEST(SpanningTree, ThreeByThreeIsPartiallyConnected) {
    const auto square = Shape::rectangle(3, 3);
    auto o = check::run(gen_spanning_tree(square), square, 1, false);
    EXPECT_TRUE(o.shape_ok) << o.why;
    EXPECT_FALSE(o.fully_connected);
    EXPECT_EQ(o.metrics.glue_count, 2);
    EXPECT_LE(o.metrics.tile_count, 16);
}

TEST(SpanningTree, SingleCell) {
    const auto one = Shape::rectangle(1, 1);
    auto o = check::run(gen_spanning_tree(one), one);
    EXPECT_TRUE(o.shape_ok) << o.why;
    EXPECT_EQ(o.metrics.glue_count, 0);
    EXPECT_EQ(o.metrics.tile_count, 1);
}

TEST(SpanningTree, TreeIsSpanningAndRootedAtALeaf) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto shape = cases::random_polyomino(rng, 2 + trial % 30);
        const auto t = spanning_tree(shape);
        EXPECT_EQ(t.parent.size() + 1, shape.size());
        EXPECT_EQ(t.children.at(t.root).size(), 1u);
        EXPECT_EQ(t.edge_label.size(), t.parent.size());
        for (const auto& [c, p] : t.parent) {
            const Coord d = c - p;
            EXPECT_EQ(std::abs(d.x) + std::abs(d.y), 1);
            EXPECT_EQ(t.depth.at(c), t.depth.at(p) + 1);
        }
    }
}

// A child edge may not share its label with the collinear edge on the other side of its parent.
TEST(SpanningTree, CollinearEdgesAlternate) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto t = spanning_tree(cases::random_polyomino(rng, 5 + trial % 35));
        std::map<std::pair<Coord, Coord>, int> undirected;
        for (const auto& [pc, l] : t.edge_label) {
            undirected[pc] = l;
            undirected[{pc.second, pc.first}] = l;
        }
        for (const auto& [pc, l] : t.edge_label) {
            const auto [p, c] = pc;
            const Coord across = p - (c - p);
            if (auto it = undirected.find({p, across}); it != undirected.end()) EXPECT_NE(it->second, l);
        }
    }
}

TEST(SpanningTree, RandomShapes) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const auto shape = cases::random_polyomino(rng, std::uniform_int_distribution<int>(2, 40)(rng));
        auto sys = gen_spanning_tree(shape);
        auto o = check::run(sys, shape, 1, false);
        EXPECT_TRUE(o.shape_ok) << "trial " << trial << ": " << o.why;
        EXPECT_LE(o.metrics.glue_count, 2);
        EXPECT_LE(o.metrics.tile_count, 16);
        EXPECT_TRUE(check::round_trips(sys));
    }
}

TEST(Scale2, LineIsOneStrip) {
    const auto shape = Shape::rectangle(3, 1);
    auto o = check::run(gen_scale2(shape), shape, 2, true);
    EXPECT_TRUE(o.shape_ok) << o.why;
    EXPECT_TRUE(o.fully_connected);
}

TEST(Scale2, SquareAndUShape) {
    for (const auto& shape : {Shape::rectangle(2, 2), Shape::from_cells({{0, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}})}) {
        auto sys = gen_scale2(shape);
        auto o = check::run(sys, shape, 2, true);
        EXPECT_TRUE(o.shape_ok) << o.why;
        EXPECT_TRUE(o.fully_connected);
        EXPECT_TRUE(check::round_trips(sys));
    }
}

// Strips of equal width stacked on each other used to let the upper strip slide along the tab.
TEST(Scale2, StackedEqualStrips) {
    const auto shape = Shape::rectangle(3, 4);
    auto o = check::run(gen_scale2(shape), shape, 2, true);
    EXPECT_TRUE(o.shape_ok) << o.why;
}

TEST(Scale2, HoleIsRejected) {
    const auto ring = Shape::from_cells({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
    try {
        gen_scale2(ring);
        FAIL() << "expected NotSimplyConnected";
    } catch (const ConstructionError& e) {
        EXPECT_EQ(e.kind(), ConstructionErrorKind::NotSimplyConnected);
    }
}

TEST(Scale2, RandomHoleFreeShapes) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const auto shape = cases::random_hole_free(rng, 25);
        auto o = check::run(gen_scale2(shape), shape, 2, false);
        EXPECT_TRUE(o.shape_ok) << "trial " << trial << ": " << o.why;
        EXPECT_TRUE(o.fully_connected) << "trial " << trial;
        EXPECT_LE(o.metrics.glue_count, 12);
        EXPECT_LE(o.metrics.tile_count, 100);
    }
}

namespace {

Shape columns(const std::vector<std::pair<int, int>>& runs) {
    std::vector<Coord> cells;
    for (int x = 0; x < static_cast<int>(runs.size()); ++x)
        for (int y = runs[x].first; y <= runs[x].second; ++y) cells.push_back({x, y});
    return Shape::from_cells(cells);
}

bool has_cut(const std::vector<MonotoneCut>& cuts, MonotoneCutKind kind) {
    return std::any_of(cuts.begin(), cuts.end(), [kind](const MonotoneCut& c) { return c.kind == kind; });
}

void expect_monotone_ok(const Shape& shape, const std::string& name) {
    auto o = check::run(gen_monotone(shape), shape, 1, false);
    EXPECT_TRUE(o.shape_ok) << name << ": " << o.why;
    EXPECT_TRUE(o.fully_connected) << name;
    EXPECT_LE(o.metrics.glue_count, 9) << name;
    EXPECT_EQ(o.metrics.temperature, 1) << name;
}

}  // namespace

TEST(Monotone, TwelveCellStaircase) {
    const auto shape = columns({{0, 2}, {1, 3}, {2, 4}, {3, 5}});
    ASSERT_EQ(shape.size(), 12u);
    expect_monotone_ok(shape, "staircase");
}

TEST(Monotone, StaircaseForcesElbow) {
    // Both middle adjacencies have four rows but only two cells of column 1 touch both sides.
    const auto shape = columns({{0, 3}, {0, 5}, {2, 7}, {4, 7}});
    const auto cuts = monotone_cuts(shape);
    ASSERT_FALSE(cuts.empty());
    EXPECT_EQ(cuts.front().kind, MonotoneCutKind::Elbow);
    EXPECT_EQ(cuts.front().column, 1);
    expect_monotone_ok(shape, "elbow staircase");
}

TEST(Monotone, SquaresUseJigsawTabs) {
    for (int n = 4; n <= 6; ++n) {
        const auto shape = Shape::rectangle(n, n);
        EXPECT_TRUE(has_cut(monotone_cuts(shape), MonotoneCutKind::JigsawTab)) << n;
        expect_monotone_ok(shape, "square " + std::to_string(n));
    }
}

TEST(Monotone, NarrowShapesHaveNoColumnCuts) {
    const auto shape = columns({{0, 6}, {2, 9}, {1, 3}});
    EXPECT_TRUE(monotone_cuts(shape).empty());
    expect_monotone_ok(shape, "three columns");
}

TEST(Monotone, PlainCutAtSmallAdjacency) {
    const auto shape = columns({{0, 4}, {0, 4}, {3, 5}, {3, 7}, {3, 7}});
    const auto cuts = monotone_cuts(shape);
    ASSERT_FALSE(cuts.empty());
    EXPECT_EQ(cuts.front().kind, MonotoneCutKind::Plain);
    expect_monotone_ok(shape, "plain");
}

TEST(Monotone, SplitColumnIsRejected) {
    const auto shape = Shape::from_cells({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
    try {
        gen_monotone(shape);
        FAIL() << "expected NotMonotone";
    } catch (const ConstructionError& e) {
        EXPECT_EQ(e.kind(), ConstructionErrorKind::NotMonotone);
    }
}

TEST(Monotone, RandomMonotoneShapes) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto shape = cases::random_monotone(rng, 30);
        expect_monotone_ok(shape, "trial " + std::to_string(trial));
    }
}
