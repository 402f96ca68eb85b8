#include <gtest/gtest.h>

#include "cppg/finite_group.hpp"
#include "cppg/spec_parser.hpp"

using namespace cppg;

TEST(SpecParser, SingleFamilies) {
  EXPECT_EQ(parse_group_spec("Z12"), GroupSpec(Cyclic{12}));
  EXPECT_EQ(parse_group_spec("Q8"), GroupSpec(Dicyclic{8}));
  EXPECT_EQ(parse_group_spec("D8"), GroupSpec(Dihedral{8}));
  EXPECT_EQ(parse_group_spec("S4"), GroupSpec(Symmetric{4}));
  EXPECT_EQ(parse_group_spec("A5"), GroupSpec(Alternating{5}));
  EXPECT_EQ(parse_group_spec("SD(7,3,2)"), GroupSpec(SemidirectZqZp{7, 3, 2}));
}

TEST(SpecParser, ModularTakesOrderOrPrimePower) {
  EXPECT_EQ(parse_group_spec("M27"), GroupSpec(Modular{3, 3}));
  EXPECT_EQ(parse_group_spec("M3^3"), GroupSpec(Modular{3, 3}));
  EXPECT_EQ(parse_group_spec("M16"), GroupSpec(Modular{2, 4}));
  EXPECT_THROW(parse_group_spec("M12"), ParseError);
}

TEST(SpecParser, ProductsAndPowers) {
  GroupSpec z4z2 = DirectProduct{{Cyclic{4}, Cyclic{2}}};
  EXPECT_EQ(parse_group_spec("Z4xZ2"), z4z2);
  EXPECT_EQ(parse_group_spec(" Z4 X Z2 "), z4z2);
  EXPECT_EQ(parse_group_spec("Z2^3"), GroupSpec(DirectProduct{{Cyclic{2}, Cyclic{2}, Cyclic{2}}}));
  EXPECT_EQ(parse_group_spec("Z2^2xZ3"), GroupSpec(DirectProduct{{Cyclic{2}, Cyclic{2}, Cyclic{3}}}));
  GroupSpec nested = parse_group_spec("(Z2xZ2)xS3");
  const auto& d = std::get<DirectProduct>(nested.family);
  ASSERT_EQ(d.factors.size(), 2U);
  EXPECT_TRUE(std::holds_alternative<DirectProduct>(d.factors[0].family));
}

TEST(SpecParser, PermutationGenerators) {
  GroupSpec s = parse_group_spec("perm:(1 2 3);(1 2)");
  const auto& p = std::get<PermutationGenerators>(s.family);
  ASSERT_EQ(p.generators.size(), 2U);
  EXPECT_EQ(p.generators[0], (CycleWord{{1, 2, 3}}));
  EXPECT_FALSE(p.tag);
  EXPECT_EQ(build_group(s).order(), 6U);

  GroupSpec tagged = parse_group_spec("perm[S3]: (1,2,3) ; (1,2)");
  const auto& t = std::get<PermutationGenerators>(tagged.family);
  ASSERT_TRUE(t.tag);
  EXPECT_EQ(*t.tag, GroupSpec(Symmetric{3}));
  EXPECT_EQ(parse_group_spec("perm:()"), GroupSpec(PermutationGenerators{{CycleWord{}}, nullptr}));
}

TEST(SpecParser, CanonicalFormRoundTrips) {
  for (const char* text : {"Z12", "Z4xZ2", "Z2^3", "(Z2xZ2)xS3", "M27", "SD(7,3,2)", "perm[D8]:(1 2 3 4);(1 3)",
                           "perm:(1 2 3)(4 5 6)(7 8 9);(2 5 8)(3 9 6)", "Q12xA4"}) {
    GroupSpec s = parse_group_spec(text);
    EXPECT_EQ(parse_group_spec(to_string(s)), s) << text << " -> " << to_string(s);
  }
}

TEST(SpecParser, SyntaxErrorsCarryPosition) {
  try {
    parse_group_spec("Z4xY2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3U);
  }
  EXPECT_THROW(parse_group_spec(""), ParseError);
  EXPECT_THROW(parse_group_spec("Z"), ParseError);
  EXPECT_THROW(parse_group_spec("Z4x"), ParseError);
  EXPECT_THROW(parse_group_spec("Z4)"), ParseError);
  EXPECT_THROW(parse_group_spec("SD(7,3)"), ParseError);
  EXPECT_THROW(parse_group_spec("perm:1 2"), ParseError);
}

TEST(SpecParser, InvalidParameters) {
  EXPECT_THROW(parse_group_spec("Z0"), InvalidSpec);
  EXPECT_THROW(parse_group_spec("D5"), InvalidSpec);
  EXPECT_THROW(parse_group_spec("D4"), InvalidSpec);
  EXPECT_THROW(parse_group_spec("Q6"), InvalidSpec);
  EXPECT_THROW(parse_group_spec("SD(7,2,3)"), InvalidSpec);
  EXPECT_THROW(parse_group_spec("SD(8,2,3)"), InvalidSpec);
  EXPECT_THROW(parse_group_spec("M6^3"), InvalidSpec);
  EXPECT_THROW(parse_group_spec("perm:(1 1)"), InvalidSpec);
  EXPECT_THROW(parse_group_spec("perm:(0 1)"), InvalidSpec);
}
