#include <gtest/gtest.h>

#include "usolab/errors.hpp"
#include "usolab/gen.hpp"
#include "usolab/random.hpp"
#include "usolab/uso.hpp"
#include "usolab/verify.hpp"

using namespace usolab;

namespace {

Outmap om(const char* s) { return Outmap::parse(s); }
Vertex vx(const char* s) { return Vertex::parse(s); }

// Hand-run transducer values for n = 3, indexed by vertex text.
const std::vector<std::pair<const char*, const char*>> kMorris3{
    {"000", "---"}, {"001", "-++"}, {"010", "++-"}, {"011", "--+"},
    {"100", "+-+"}, {"101", "+--"}, {"110", "-+-"}, {"111", "+++"},
};

LcpInstance random_instance(Family family, int n, std::uint64_t seed) {
  GenSpec spec;
  spec.family = family;
  spec.n = n;
  spec.seed = seed;
  return generate_instance(spec);
}

}  // namespace

TEST(PlcpOutmap, Examples) {
  const LcpInstance id(RatMatrix::identity(3), RatVector(3, Rational(-1)));
  EXPECT_EQ(plcp_outmap(id, vx("000")), om("---"));
  const LcpInstance m3 = morris_instance(3);
  EXPECT_EQ(plcp_outmap(m3, vx("000")), om("---"));
  EXPECT_EQ(plcp_outmap(m3, vx("111")), om("+++"));
}

TEST(PlcpOutmap, DegeneracyNamesBasisAndCoordinate) {
  const LcpInstance inst(RatMatrix::identity(2), RatVector{0, -1});
  try {
    plcp_outmap(inst, vx("00"));
    FAIL() << "expected DegeneracyError";
  } catch (const DegeneracyError& e) {
    EXPECT_EQ(e.coordinate(), 1);
    EXPECT_EQ(e.basis(), "{}");
  }
}

TEST(MorrisInstance, Pattern) {
  const LcpInstance m3 = morris_instance(3);
  EXPECT_EQ(m3.M, (RatMatrix{{1, 2, 0}, {0, 1, 2}, {2, 0, 1}}));
  EXPECT_EQ(m3.q, RatVector(3, Rational(-1)));
  const LcpInstance m5 = morris_instance(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const long expected = i == j ? 1 : (j == i + 1 || (i == 4 && j == 0)) ? 2 : 0;
      EXPECT_EQ(m5.M(i, j), Rational(expected));
    }
  EXPECT_THROW(morris_instance(4), ParityError);
  EXPECT_THROW(morris_instance(1), ParityError);
  EXPECT_THROW(MorrisOrientation(6), ParityError);
}

TEST(MorrisTransducer, Examples) {
  EXPECT_EQ(morris_outmap(5, vx("10110")), om("+--++"));
  EXPECT_EQ(morris_outmap(3, vx("000")), om("---"));
  EXPECT_EQ(morris_outmap(3, vx("110")), om("-+-"));
  for (const auto& [v, o] : kMorris3) EXPECT_EQ(morris_outmap(3, vx(v)), om(o)) << v;
}

TEST(MorrisTransducer, MatchesLinearAlgebra) {
  for (int n : {3, 5, 7, 9}) {
    const UsoTable a = tabulate(MorrisOrientation(n));
    const UsoTable b = tabulate_plcp(morris_instance(n));
    EXPECT_EQ(a, b) << "n=" << n;
  }
}

TEST(MorrisTransducer, StartIndependent) {
  for (int n : {3, 5, 7, 9}) {
    for (std::uint64_t b = 0; b + 1 < (std::uint64_t{1} << n); ++b) {
      const Vertex v(n, b);
      const Outmap ref = morris_outmap(n, v);
      for (int i = 1; i <= n; ++i)
        if (v.bit(i) == 0) { ASSERT_EQ(morris_outmap(n, v, i), ref) << v.to_string() << " start " << i; }
    }
  }
  EXPECT_THROW(morris_outmap(3, vx("110"), 1), RangeError);
}

TEST(MorrisTransducer, CyclicShiftClosure) {
  for (int n : {3, 5, 7, 9})
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const Vertex v(n, b);
      for (int s = 1; s < n; ++s)
        ASSERT_EQ(morris_outmap(n, cyclic_shift(v, s)), cyclic_shift(morris_outmap(n, v), s));
    }
}

TEST(Reorient, Examples) {
  const auto m = morris(3);
  const auto same = reorient(m, CoordSet(3));
  for (std::uint64_t b = 0; b < 8; ++b) EXPECT_EQ(same->evaluate(Vertex(3, b)), m->evaluate(Vertex(3, b)));
  EXPECT_EQ(reorient(m, CoordSet::all(3))->evaluate(vx("000")), om("+++"));
  for (int n : {3, 5}) {
    LcpInstance neg = morris_instance(n);
    for (auto& x : neg.q) x = -x;
    EXPECT_EQ(tabulate(*reorient(morris(n), CoordSet::all(n))), tabulate(PlcpOrientation(neg)));
  }
}

TEST(Reorient, Involution) {
  const auto m = morris(5);
  const CoordSet f(5, {2, 5});
  EXPECT_EQ(tabulate(*reorient(reorient(m, f), f)), tabulate(*m));
}

TEST(Reorient, PreservesUso) {
  Rng rng(6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const auto o = plcp(random_instance(Family::RandomP, n, seed));
    const CoordSet f = CoordSet::from_mask(n, rng.below(std::uint64_t{1} << n));
    EXPECT_TRUE(is_uso(tabulate(*reorient(o, f))).pass);
  }
}

TEST(Restrict, Examples) {
  const auto m = morris(3);
  EXPECT_EQ(tabulate(*restrict_to(m, Subcube(vx("000"), CoordSet::all(3)))), tabulate(*m));
  const auto facet = std::make_shared<RestrictedOrientation>(m, Subcube(vx("000"), CoordSet(3, {1, 2})));
  EXPECT_EQ(facet->evaluate(vx("11")), om("-+"));
  EXPECT_EQ(facet->lift(vx("11")), vx("110"));
  const auto point = restrict_to(m, Subcube(vx("101"), CoordSet(3)));
  EXPECT_EQ(point->dimension(), 0);
  EXPECT_EQ(point->evaluate(Vertex(0)).to_string(), "");
}

TEST(Restrict, SubcubesOfKOrientationsKeepUniformity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 5;
    const auto o = plcp(random_instance(Family::RandomK, n, seed));
    for_each_subcube(n, [&](const Subcube& s) {
      if (s.dimension() < 2) return;
      const UsoTable t = tabulate(*restrict_to(o, s));
      EXPECT_TRUE(is_uso(t).pass);
      EXPECT_TRUE(is_two_uniform(t).pass) << s.to_string();
      EXPECT_TRUE(is_locally_up_uniform(t).pass) << s.to_string();
    });
  }
}

TEST(Antipodal, Examples) {
  const auto m = morris(3);
  const auto r = antipodal_relabel(m);
  EXPECT_EQ(r->evaluate(vx("111")), om("---"));
  EXPECT_EQ(tabulate(*antipodal_relabel(r)), tabulate(*m));
  for (int n : {3, 5}) EXPECT_TRUE(is_two_up_uniform(tabulate(*antipodal_relabel(morris(n)))).pass);
}

TEST(Uniform, Examples) {
  const auto u = uniform(2);
  EXPECT_EQ(u->evaluate(vx("01")), om("-+"));
  EXPECT_EQ(uniform(4)->evaluate(Vertex::ones(4)), om("++++"));
  EXPECT_TRUE(is_uso(tabulate(*uniform(3))).pass);
  EXPECT_EQ(tabulate(*uniform(2)).size(), 4u);
}

TEST(Tabulate, MorrisThreeTable) {
  const UsoTable t = tabulate(*morris(3));
  ASSERT_EQ(t.size(), 8u);
  for (const auto& [v, o] : kMorris3) EXPECT_EQ(t.at(vx(v).bits()), om(o));
  EXPECT_EQ(t.sink(), vx("111"));
  EXPECT_EQ(t.source(), vx("000"));
}

TEST(Tabulate, GrayCodeMatchesFreshSolves) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const LcpInstance inst = random_instance(seed % 2 ? Family::RandomK : Family::RandomP, n, seed);
    EXPECT_EQ(tabulate_plcp(inst), tabulate(PlcpOrientation(inst)));
  }
}

TEST(Tabulate, EdgeConsistencyOfEveryOracle) {
  std::vector<OrientationPtr> oracles{morris(3), morris(5), morris(7), uniform(7),
                                      antipodal_relabel(morris(5)), reorient(morris(7), CoordSet(7, {1, 4}))};
  for (std::uint64_t seed = 0; seed < 6; ++seed)
    oracles.push_back(plcp(random_instance(Family::RandomP, 7, seed)));
  for (const auto& o : oracles) EXPECT_NO_THROW(tabulate(*o));
}

TEST(Tabulate, InconsistentOracleIsRejected) {
  std::vector<Outmap> rows(4, om("--"));
  EXPECT_THROW(UsoTable(2, rows), MalformedOrientationError);
}

TEST(TableText, RoundTrip) {
  const UsoTable t = tabulate(*morris(3));
  const std::string text = table_to_text(t);
  EXPECT_EQ(text.substr(0, 10), "3\n000 ---\n");
  EXPECT_NE(text.find("\n101 +--\n"), std::string::npos);
  EXPECT_EQ(table_from_text(text), t);
}

TEST(TableText, Errors) {
  EXPECT_THROW(table_from_text("2\n00 --\n01 -+\n10 +-\n"), ParseError);
  EXPECT_THROW(table_from_text("2\n01 --\n00 -+\n10 +-\n11 ++\n"), ParseError);
  EXPECT_THROW(table_from_text("2\n00 --\n01 -+\n10 +x\n11 ++\n"), ParseError);
  try {
    table_from_text("2\n00 --\n01 -+\n10 +-\n11 +\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
  }
  EXPECT_THROW(table_from_text("2\n00 --\n01 --\n10 --\n11 --\n"), MalformedOrientationError);
}

TEST(Wrappers, MemoizedCountsDistinctVertices) {
  const auto memo = std::make_shared<MemoizedOrientation>(morris(5));
  for (int k = 0; k < 3; ++k)
    for (std::uint64_t b = 0; b < 10; ++b) EXPECT_EQ(memo->evaluate(Vertex(5, b)), morris_outmap(5, Vertex(5, b)));
  EXPECT_EQ(memo->distinct_evaluations(), 10u);
}

TEST(Wrappers, CrossCheckDetectsDisagreement) {
  CrossCheckedOrientation ok(morris(5), plcp(morris_instance(5)), 3);
  for (std::uint64_t b = 0; b < 32; ++b) ok.evaluate(Vertex(5, b));
  EXPECT_EQ(ok.queries(), 32u);
  EXPECT_GE(ok.checks(), 10u);
  CrossCheckedOrientation bad(morris(3), uniform(3), 1);
  EXPECT_THROW(bad.evaluate(vx("110")), MalformedOrientationError);
}

TEST(Wrappers, DimensionMismatch) {
  EXPECT_THROW(morris(3)->evaluate(vx("0000")), RangeError);
}
