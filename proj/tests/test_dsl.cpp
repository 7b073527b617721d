#include <gtest/gtest.h>

#include "sasm/dsl.hpp"

using namespace sasm;

namespace {

const char* kSmall = R"(system demo
temperature 2
glue x strength 2
glue y strength 1
tile p n=x e=y
tile q s=x w=y
stage 1
bin one add p
bin two add q
stage 2
bin both from one,two
output both
)";

bool has_error(const ParseResult& r, ParseErrorKind kind) {
    for (const auto& d : r.diagnostics)
        if (d.kind == kind) return true;
    return false;
}

}  // namespace

TEST(Parse, SmallSystem) {
    auto r = parse_system(kSmall);
    ASSERT_TRUE(r.ok());
    const auto& s = *r.system;
    EXPECT_EQ(s.name, "demo");
    EXPECT_EQ(s.temperature, 2);
    ASSERT_EQ(s.tiles.size(), 2u);
    EXPECT_EQ(s.tiles[0].glue(Side::North), "x");
    EXPECT_EQ(s.tiles[0].glue(Side::West), "null");
    ASSERT_EQ(s.stage_count(), 2);
    ASSERT_EQ(s.stages[1][0].from.size(), 2u);
    EXPECT_EQ(s.stages[1][0].from[0], (BinRef{1, "one"}));
    ASSERT_EQ(s.output.size(), 1u);
    EXPECT_EQ(s.output[0], (BinRef{2, "both"}));
}

TEST(Parse, ZeroStrengthIsSemanticError) {
    auto r = parse_system("glue a strength 0\n");
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has_error(r, ParseErrorKind::Semantic));
    EXPECT_EQ(r.diagnostics.front().line, 1);
}

TEST(Parse, UndeclaredFromIsSemanticError) {
    auto r = parse_system("tile t\nstage 1\nbin b1 add t\nstage 2\nbin b2 from b9\noutput b2\n");
    EXPECT_FALSE(r.ok());
    ASSERT_TRUE(has_error(r, ParseErrorKind::Semantic));
    EXPECT_EQ(r.diagnostics.front().line, 5);
}

TEST(Parse, SyntaxErrorHasPosition) {
    auto r = parse_system("system s\ntile t n=\n");
    EXPECT_FALSE(r.ok());
    ASSERT_TRUE(has_error(r, ParseErrorKind::Syntax));
    EXPECT_EQ(r.diagnostics.front().line, 2);
    EXPECT_GT(r.diagnostics.front().column, 0);
}

TEST(Parse, UnknownTileAndGlue) {
    EXPECT_TRUE(has_error(parse_system("tile t n=zz\n"), ParseErrorKind::Semantic));
    EXPECT_TRUE(has_error(parse_system("stage 1\nbin b add nope\noutput b\n"), ParseErrorKind::Semantic));
}

TEST(Parse, CommentsAndBlankLines) {
    auto r = parse_system("# header\n\nsystem s # trailing\n  temperature 1\n");
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.system->name, "s");
    EXPECT_EQ(r.system->stage_count(), 0);
}

TEST(Serialize, RoundTripAndCanonicalOrder) {
    auto s = *parse_system(kSmall).system;
    auto text = serialize_system(s);
    auto again = parse_system(text);
    ASSERT_TRUE(again.ok()) << text;
    EXPECT_TRUE(structurally_equal(s, *again.system));
    EXPECT_EQ(serialize_system(*again.system), text);
    EXPECT_LT(text.find("glue x"), text.find("glue y"));
}

TEST(Serialize, EmptySystemIsHeaderOnly) {
    auto text = serialize_system(StagedSystem{});
    EXPECT_EQ(text.find("stage"), std::string::npos);
    EXPECT_EQ(text.find("tile"), std::string::npos);
    auto r = parse_system(text);
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(structurally_equal(*r.system, StagedSystem{}));
}

TEST(ShapeIO, ParseAndSerialize) {
    auto r = parse_shape("#..\n###\n");
    ASSERT_TRUE(r.shape.has_value());
    EXPECT_EQ(r.shape->size(), 4u);
    EXPECT_TRUE(r.shape->contains({0, 1}));
    EXPECT_FALSE(r.shape->contains({2, 1}));
    EXPECT_EQ(serialize_shape(*r.shape), "#..\n###\n");
}

TEST(ShapeIO, Rejects) {
    EXPECT_FALSE(parse_shape("...\n").shape.has_value());
    EXPECT_FALSE(parse_shape("##\n#\n").shape.has_value());
    EXPECT_FALSE(parse_shape("#.#\n").shape.has_value());
    EXPECT_FALSE(parse_shape("#x\n").shape.has_value());
}
