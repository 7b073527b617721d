#include <gtest/gtest.h>

#include "property_checks.hpp"
#include "sasm/constructions.hpp"

using namespace sasm;

namespace {

constexpr int kCases = 500;

}  // namespace

TEST(Properties, CanonicalizationIsIdempotentAndTranslationInvariant) {
    EXPECT_EQ(props::canonicalization_failures(kCases, 11), 0);
}

TEST(Properties, CombinationIsCommutative) { EXPECT_EQ(props::commutativity_failures(kCases, 12), 0); }

TEST(Properties, RaisingTemperatureNeverAddsCombinations) { EXPECT_EQ(props::temperature_failures(kCases, 13), 0); }

TEST(Properties, SerializeThenParseIsIdentity) { EXPECT_EQ(props::round_trip_failures(kCases, 14), 0); }

TEST(Properties, ParserIsTotal) { EXPECT_EQ(props::parser_totality_failures(2 * kCases, 16), 0); }

TEST(Properties, GeneratorOutputsRoundTrip) {
    std::vector<StagedSystem> systems;
    for (int k = 0; k <= 4; ++k) systems.push_back(gen_line_pow2(k));
    for (int n = 1; n <= 12; ++n) systems.push_back(gen_line(n));
    for (int n = 2; n <= 5; ++n) systems.push_back(gen_square_jigsaw(n));
    for (int k = 0; k <= 2; ++k) systems.push_back(gen_counter(k));
    systems.push_back(gen_crazy_string("1011", 4));
    std::mt19937 rng(15);
    for (int i = 0; i < 5; ++i) {
        const auto shape = cases::random_hole_free(rng, 12);
        systems.push_back(gen_spanning_tree(shape));
        systems.push_back(gen_scale2(shape));
    }
    for (const auto& s : systems) {
        const auto parsed = parse_system(serialize_system(s));
        ASSERT_TRUE(parsed.ok()) << s.name;
        EXPECT_TRUE(structurally_equal(*parsed.system, s)) << s.name;
    }
}
