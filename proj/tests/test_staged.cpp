#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "sasm/dsl.hpp"
#include "sasm/staged.hpp"
#include "sasm/verify.hpp"

using namespace sasm;

namespace {

StagedSystem load(const std::string& text) {
    auto r = parse_system(text);
    if (!r.ok()) {
        for (auto& d : r.diagnostics) ADD_FAILURE() << d.format();
        throw std::runtime_error("parse failed");
    }
    return *r.system;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kDataDir = SASM_DATA_DIR;

}  // namespace

TEST(Staged, LineOfTenFromThreeTiles) {
    auto sys = load(read_file(kDataDir + "/line10.tam"));
    auto m = metrics(sys);
    EXPECT_EQ(m.tile_count, 3);
    EXPECT_EQ(m.stage_count, 3);
    EXPECT_EQ(m.bin_count, 2);
    EXPECT_EQ(m.glue_count, 3);
    EXPECT_EQ(m.temperature, 1);

    auto ex = execute(sys);
    ASSERT_EQ(ex.status, ExecutionStatus::Ok);
    EXPECT_TRUE(ex.unique());
    ASSERT_EQ(ex.terminals().size(), 1u);
    EXPECT_TRUE(uniquely_assembles_shape(ex.output, Shape::rectangle(10, 1)));
    auto t = ex.terminals().front();
    EXPECT_TRUE(is_fully_connected(t, ex.tiles));
    auto trace = witness_derivation(ex, t);
    EXPECT_EQ(trace.size(), 9u);  // 10 singles joined by 9 attachments
    EXPECT_TRUE(is_planar_system(trace));
}

TEST(Staged, IntermediateBins) {
    auto ex = execute(load(read_file(kDataDir + "/line10.tam")));
    const auto* mid = ex.find({2, "mid"});
    ASSERT_NE(mid, nullptr);
    ASSERT_EQ(mid->result.terminal.size(), 1u);
    EXPECT_EQ(mid->result.terminal_supertiles()[0].size(), 4u);
    const auto* ab = ex.find({1, "ab"});
    ASSERT_NE(ab, nullptr);
    EXPECT_EQ(ab->result.terminal_supertiles()[0].size(), 2u);
}

TEST(Staged, ValidateFindsBrokenReferences) {
    StagedSystem s;
    s.glues.declare("a", 1);
    s.tiles.push_back(Tile{"t", {"a", "null", "null", "null"}});
    s.stages = {{BinDecl{"b1", {}, {"t", "zz"}}}, {BinDecl{"b2", {{1, "nope"}}, {}}}};
    s.output = {{2, "b2"}};
    auto diags = validate(s);
    bool unknown_tile = false, unknown_bin = false;
    for (auto& d : diags) {
        unknown_tile = unknown_tile || d.kind == DiagnosticKind::UnknownTile;
        unknown_bin = unknown_bin || d.kind == DiagnosticKind::UnknownBin;
    }
    EXPECT_TRUE(unknown_tile);
    EXPECT_TRUE(unknown_bin);
    EXPECT_EQ(execute(s).status, ExecutionStatus::Invalid);
}

TEST(Staged, StageSkippingEdgeIsInvalid) {
    StagedSystem s;
    s.tiles.push_back(Tile{"t"});
    s.stages = {{BinDecl{"b1", {}, {"t"}}}, {BinDecl{"b2", {}, {"t"}}}, {BinDecl{"b3", {{1, "b1"}}, {}}}};
    s.output = {{3, "b3"}};
    auto diags = validate(s);
    ASSERT_FALSE(diags.empty());
    EXPECT_EQ(diags.front().kind, DiagnosticKind::InvalidEdge);
}

TEST(Staged, EmptySystemMetricsAreZero) {
    StagedSystem s;
    auto m = metrics(s);
    EXPECT_EQ(m.glue_count + m.tile_count + m.bin_count + m.stage_count + m.temperature, 0);
}

TEST(Staged, DivergentOutputBinAborts) {
    StagedSystem s;
    s.glues.declare("a", 1);
    s.tiles.push_back(Tile{"t", {"null", "a", "null", "a"}});
    s.stages = {{BinDecl{"grow", {}, {"t"}}}};
    s.output = {{1, "grow"}};
    ClosureBudget b;
    b.max_supertile_size = 8;
    auto ex = execute(s, b);
    EXPECT_EQ(ex.status, ExecutionStatus::Aborted);
    ASSERT_TRUE(ex.diverged.has_value());
    EXPECT_EQ(ex.diverged->name, "grow");
    EXPECT_EQ(ex.diverged_dimension, BudgetDimension::SupertileSize);
    EXPECT_FALSE(ex.unique());
}
