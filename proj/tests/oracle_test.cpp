#include <gtest/gtest.h>

#include "cppg/corpus.hpp"
#include "cppg/oracle.hpp"
#include "cppg/power_graph.hpp"
#include "cppg/spec_parser.hpp"

using namespace cppg;

namespace {

GroupFacts facts(const std::string& text) {
  GroupSpec spec = parse_group_spec(text);
  return group_facts(spec, build_group(spec));
}

PredictedProperties predict(const std::string& text) { return classification_oracle(facts(text)); }

}  // namespace

TEST(Oracle, CanonicalNames) {
  auto name = [](const std::string& t) { return canonical_name(parse_group_spec(t)); };
  EXPECT_EQ(name("Z2xZ4"), "Z4xZ2");
  EXPECT_EQ(name("Z2xZ3"), "Z6");
  EXPECT_EQ(name("Z2^3"), "Z2xZ2xZ2");
  EXPECT_EQ(name("Z6xZ10"), "Z30xZ2");
  EXPECT_EQ(name("D8"), "D8");
  EXPECT_EQ(name("perm[D8]:(1 2 3 4);(1 3)"), "D8");
  EXPECT_EQ(name("perm:(1 2 3 4);(1 3)"), std::nullopt);
}

TEST(Oracle, GroupFacts) {
  GroupFacts q16 = facts("Q16");
  EXPECT_TRUE(q16.generalized_quaternion());
  EXPECT_FALSE(q16.abelian);
  EXPECT_EQ(q16.exponent, 8U);
  EXPECT_TRUE(facts("Z2^4").elementary_abelian_2());
  EXPECT_FALSE(facts("M27").exponent_three_3_group());
  EXPECT_TRUE(facts(corpus::kHeisenberg27).exponent_three_3_group());
  EXPECT_TRUE(facts("A4").two_three_class());
  EXPECT_TRUE(facts(corpus::kGeneralizedDihedral18).two_three_class());
  EXPECT_FALSE(facts("Z2xA4").two_three_class());
  EXPECT_TRUE(facts("Z45").cyclic_pqm());
  EXPECT_FALSE(facts("Z30").cyclic_pqm());
}

TEST(Oracle, SpecificGroups) {
  PredictedProperties z20 = predict("Z20");
  EXPECT_EQ(z20.orientable, OrientableClass::Toroidal);
  EXPECT_EQ(z20.nonorientable, NonorientableClass::Projective);
  EXPECT_EQ(z20.components, euler_phi(20) + 1);
  EXPECT_EQ(z20.girth, Distance(4));

  PredictedProperties z28 = predict("Z28");
  EXPECT_EQ(z28.orientable, OrientableClass::Toroidal);
  EXPECT_EQ(z28.nonorientable, NonorientableClass::Higher);

  PredictedProperties e16 = predict("Z2^4");
  EXPECT_EQ(e16.complete, true);
  EXPECT_EQ(e16.diameter, Distance(1));
  EXPECT_EQ(e16.orientable, OrientableClass::Higher);

  PredictedProperties v4 = predict("Z2xZ2");
  EXPECT_EQ(v4.cycle, true);
  EXPECT_EQ(v4.orientable, OrientableClass::Planar);
  EXPECT_EQ(v4.outerplanar, true);

  PredictedProperties q8 = predict("Q8");
  EXPECT_EQ(q8.components, 2U);
  EXPECT_EQ(q8.isolated, 1U);
  EXPECT_EQ(q8.diameter, Distance::infinite());
  EXPECT_EQ(q8.claw_free, true);

  PredictedProperties z2 = predict("Z2");
  EXPECT_FALSE(z2.diameter);

  EXPECT_EQ(predict("Z49").bipartite, true);
  EXPECT_EQ(predict("Z49").girth, Distance::infinite());
  EXPECT_EQ(predict("Z14").girth, Distance::infinite());
  EXPECT_EQ(predict("D10").girth, Distance(3));
}

TEST(Oracle, DicyclicDiameterPrediction) {
  // The stated rule gives 2 for every connected non-elementary case; see README for Q12.
  EXPECT_EQ(predict("Q12").diameter, Distance(2));
  EXPECT_EQ(predict("Q12").components, 1U);
}

TEST(Oracle, UntaggedPermutationGroupsStaySilent) {
  PredictedProperties d8 = predict("perm:(1 2 3 4);(1 3)");
  EXPECT_FALSE(d8.orientable);
  EXPECT_FALSE(d8.nonorientable);
  // Order alone settles claw-freeness here.
  EXPECT_EQ(d8.claw_free, false);
  PredictedProperties tagged = predict("perm[D8]:(1 2 3 4);(1 3)");
  EXPECT_EQ(tagged.orientable, OrientableClass::Toroidal);
}

TEST(Oracle, TagMismatchIsRejected) {
  GroupSpec spec = parse_group_spec("perm[Z4xZ2]:(1 2 3 4);(1 3)");
  EXPECT_THROW(group_facts(spec, build_group(spec)), InvalidSpec);
}

TEST(Oracle, ThreePrimesAreNeverPlanarOrToroidal) {
  for (const char* text : {"Z30", "Z42", "Z2xZ15", "S3xZ5", "Z66"}) {
    PredictedProperties p = predict(text);
    SCOPED_TRACE(text);
    EXPECT_EQ(p.orientable, OrientableClass::Higher);
    EXPECT_EQ(p.nonorientable, NonorientableClass::Higher);
  }
}

TEST(Oracle, PredictionsAreInternallyConsistent) {
  for (const auto& text : corpus::named()) {
    SCOPED_TRACE(text);
    GroupSpec spec = parse_group_spec(text);
    FiniteGroup g = build_group(spec);
    PredictedProperties p = classification_oracle(spec, g);
    EXPECT_TRUE(consistency_violations(p, g.order() - 1).empty());
  }
}

TEST(Oracle, StructurePredictionSizes) {
  auto s = predict("Z15").structure;
  ASSERT_TRUE(s);
  EXPECT_EQ(s->graph.vertex_count(), 14U);
  EXPECT_EQ(s->graph.edge_count(), 8U);
  auto d10 = predict("D10").structure;
  ASSERT_TRUE(d10);
  EXPECT_EQ(d10->graph.vertex_count(), 9U);
  EXPECT_FALSE(predict("Q16").structure);
}
