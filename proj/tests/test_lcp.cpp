#include <gtest/gtest.h>

#include "usolab/errors.hpp"
#include "usolab/gen.hpp"
#include "usolab/lcp.hpp"
#include "usolab/random.hpp"
#include "usolab/uso.hpp"

using namespace usolab;

namespace {

Rational cofactor_det(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  Rational det(0);
  for (std::size_t j = 0; j < n; ++j) {
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = a(r, c);
    const Rational term = a(0, j) * cofactor_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

std::vector<Rational> principal_minors(const RatMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<Rational> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1u) idx.push_back(i);
    out.push_back(cofactor_det(m.select(idx, idx)));
  }
  return out;
}

bool p_by_cofactors(const RatMatrix& m) {
  for (const auto& d : principal_minors(m))
    if (d.sign() <= 0) return false;
  return true;
}

const RatMatrix kK2{{2, -1}, {-1, 2}};

}  // namespace

TEST(BasisMatrix, Examples) {
  const LcpInstance morris = morris_instance(3);
  EXPECT_EQ(basis_matrix(morris, CoordSet(3)), RatMatrix::identity(3));
  EXPECT_EQ(basis_matrix(morris, CoordSet::all(3)), -morris.M);
  EXPECT_EQ(basis_matrix(morris, CoordSet(3, {2})), (RatMatrix{{1, -2, 0}, {0, -1, 0}, {0, 0, 1}}));
}

TEST(BasisSolution, Examples) {
  const LcpInstance morris = morris_instance(3);
  EXPECT_EQ(basis_solution(morris, CoordSet(3)), morris.q);
  for (const auto& x : basis_solution(morris, CoordSet::all(3))) EXPECT_GT(x.sign(), 0);
  const LcpInstance id(RatMatrix::identity(2), RatVector{-1, -1});
  EXPECT_EQ(basis_solution(id, CoordSet(2, {1})), (RatVector{1, -1}));
}

TEST(BasisSolution, SingularBasisIsNotP) {
  const LcpInstance inst(RatMatrix{{0, 1}, {1, 0}}, RatVector{-1, -1});
  EXPECT_THROW(basis_solution(inst, CoordSet(2, {1})), NotPMatrixError);
}

TEST(ExtractSolution, Examples) {
  const LcpInstance pos(RatMatrix::identity(2), RatVector{1, 1});
  const LcpSolution s = extract_solution(pos, CoordSet(2));
  EXPECT_EQ(s.w, (RatVector{1, 1}));
  EXPECT_EQ(s.z, (RatVector{0, 0}));

  const LcpInstance morris = morris_instance(3);
  const LcpSolution ms = extract_solution(morris, CoordSet::all(3));
  EXPECT_EQ(ms.w, (RatVector{0, 0, 0}));
  EXPECT_EQ(ms.z, basis_solution(morris, CoordSet::all(3)));
  EXPECT_TRUE(check_solution(morris, ms));

  const LcpInstance k(kK2, RatVector{-1, -1});
  const LcpSolution ks = extract_solution(k, CoordSet::all(2));
  EXPECT_EQ(ks.z, (RatVector{1, 1}));
  EXPECT_EQ(ks.w, (RatVector{0, 0}));
}

TEST(ExtractSolution, NegativeCoordinateIsNamed) {
  const LcpInstance id(RatMatrix::identity(2), RatVector{-1, -1});
  try {
    extract_solution(id, CoordSet(2, {1}));
    FAIL() << "expected NotASolutionError";
  } catch (const NotASolutionError& e) {
    EXPECT_EQ(e.coordinate(), 2);
  }
}

TEST(CheckSolution, Examples) {
  const LcpInstance pos(RatMatrix::identity(2), RatVector{1, 1});
  EXPECT_TRUE(check_solution(pos, {RatVector{1, 1}, RatVector{0, 0}}));
  EXPECT_FALSE(check_solution(pos, {RatVector{1, 1}, RatVector{1, 0}}));
}

TEST(CheckSolution, RoundTripOnEveryFeasibleBasis) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenSpec spec;
    spec.family = Family::RandomP;
    spec.n = 4;
    spec.seed = seed;
    const LcpInstance inst = generate_instance(spec);
    int feasible = 0;
    for (std::uint64_t b = 0; b < 16; ++b) {
      const CoordSet basis = CoordSet::from_mask(4, b);
      const RatVector x = basis_solution(inst, basis);
      if (std::any_of(x.begin(), x.end(), [](const Rational& r) { return r.sign() < 0; })) continue;
      ++feasible;
      EXPECT_TRUE(check_solution(inst, extract_solution(inst, basis)));
    }
    EXPECT_EQ(feasible, 1);
  }
}

TEST(PMatrix, Examples) {
  EXPECT_TRUE(is_p_matrix(RatMatrix::identity(4)));
  const RatMatrix morris = morris_instance(3).M;
  EXPECT_TRUE(is_p_matrix(morris));
  std::vector<Rational> minors = principal_minors(morris);
  std::sort(minors.begin(), minors.end());
  EXPECT_EQ(minors, (std::vector<Rational>{1, 1, 1, 1, 1, 1, 9}));
  EXPECT_FALSE(is_p_matrix(RatMatrix{{0, 1}, {1, 0}}));
}

TEST(PMatrix, AgreesWithCofactorOracle) {
  Rng rng(21);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(i == j ? rng.range(0, 6) : rng.range(-3, 3));
    const bool p = p_by_cofactors(m);
    positives += p;
    EXPECT_EQ(is_p_matrix(m), p);
  }
  EXPECT_GT(positives, 20);
}

TEST(PMatrix, CapabilityLimit) {
  EXPECT_THROW(is_p_matrix(RatMatrix::identity(13)), CapabilityError);
  EXPECT_TRUE(is_p_matrix(RatMatrix::identity(13), 13));
}

TEST(KMatrix, Examples) {
  EXPECT_TRUE(is_k_matrix(kK2));
  EXPECT_FALSE(is_k_matrix(morris_instance(3).M));
  EXPECT_TRUE(is_k_matrix(RatMatrix::identity(3)));
  EXPECT_FALSE(is_k_matrix(RatMatrix{{1, -2}, {-2, 1}}));
}

TEST(Nondegenerate, Examples) {
  EXPECT_TRUE(is_nondegenerate(morris_instance(3)));
  EXPECT_FALSE(is_nondegenerate(LcpInstance(RatMatrix::identity(2), RatVector{0, -1})));
  EXPECT_TRUE(is_nondegenerate(LcpInstance(RatMatrix::identity(2), RatVector{-1, -1})));
}

TEST(Nondegenerate, MatchesDirectScan) {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const RatMatrix m = gen_k_matrix(n, rng.next(), 2);
    RatVector q(n);
    for (auto& x : q) x = Rational(rng.range(-2, 2));
    const LcpInstance inst(m, q);
    bool direct = true;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
      for (const auto& x : basis_solution(inst, CoordSet::from_mask(n, b)))
        if (x.is_zero()) direct = false;
    EXPECT_EQ(is_nondegenerate(inst), direct);
  }
}

TEST(PivotTransform, Examples) {
  EXPECT_EQ(principal_pivot_transform(kK2, CoordSet(2)), kK2);
  EXPECT_EQ(principal_pivot_transform(RatMatrix::identity(3), CoordSet::all(3)), RatMatrix::identity(3));
  EXPECT_EQ(principal_pivot_transform(kK2, CoordSet(2, {1})),
            (RatMatrix{{Rational(1, 2), Rational(1, 2)}, {Rational(-1, 2), Rational(3, 2)}}));
}

TEST(PivotTransform, SingularBlock) {
  EXPECT_THROW(principal_pivot_transform(RatMatrix{{0, 1}, {1, 0}}, CoordSet(2, {1})), SingularMatrixError);
}

TEST(PivotTransform, InvolutionAndPPreservation) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const RatMatrix m = gen_p_matrix(n, seed, seed % 2 ? PStrategy::Gram : PStrategy::KPpt, 2);
    ASSERT_TRUE(is_p_matrix(m));
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      const CoordSet alpha = CoordSet::from_mask(n, a);
      const RatMatrix t = principal_pivot_transform(m, alpha);
      EXPECT_EQ(principal_pivot_transform(t, alpha), m);
      EXPECT_TRUE(p_by_cofactors(t));
    }
  }
}

TEST(PivotTransform, OrientationIsShifted) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    GenSpec spec;
    spec.family = Family::RandomK;
    spec.n = n;
    spec.seed = seed;
    const LcpInstance inst = generate_instance(spec);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      const CoordSet alpha = CoordSet::from_mask(n, a);
      const LcpInstance moved = pivot_instance(inst, alpha);
      EXPECT_EQ(moved.q, basis_solution(inst, alpha));
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
        EXPECT_EQ(plcp_outmap(moved, Vertex(n, v)), plcp_outmap(inst, Vertex(n, v ^ a)));
    }
  }
}

TEST(BasisInvertibility, EveryBasisOfAPMatrix) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 6;
    const RatMatrix m = gen_p_matrix(n, seed, PStrategy::KPpt, 2);
    const LcpInstance inst(m, RatVector(n, Rational(1)));
    for (std::uint64_t b = 0; b < 64; ++b)
      EXPECT_FALSE(cofactor_det(basis_matrix(inst, CoordSet::from_mask(n, b))).is_zero());
  }
}

TEST(Tableau, MatchesFreshSolves) {
  GenSpec spec;
  spec.family = Family::RandomP;
  spec.n = 5;
  spec.seed = 9;
  const LcpInstance inst = generate_instance(spec);
  BasisTableau tab(inst);
  Rng rng(2);
  for (int k = 0; k < 100; ++k) {
    tab.toggle(1 + static_cast<int>(rng.below(5)));
    EXPECT_EQ(tab.solution(), basis_solution(inst, tab.basis()));
  }
}

TEST(InstanceJson, RoundTripAndFormat) {
  const LcpInstance m = morris_instance(3);
  const std::string text = instance_to_json(m);
  EXPECT_NE(text.find("[\"1\",\"2\",\"0\"]"), std::string::npos);
  const LcpInstance back = instance_from_json(text);
  EXPECT_EQ(back.M, m.M);
  EXPECT_EQ(back.q, m.q);

  const LcpInstance ints = instance_from_json(R"({"n":2,"M":[[2,-1],[-1,"2"]],"q":["-1/2",-1]})");
  EXPECT_EQ(ints.M, kK2);
  EXPECT_EQ(ints.q, (RatVector{Rational(-1, 2), -1}));
}

TEST(InstanceJson, Errors) {
  EXPECT_THROW(instance_from_json("{\"n\": 2,\n \"M\": [[1,0],[0,1]],\n \"q\": [1]}"), Error);
  try {
    instance_from_json("{\"n\": 2,\n \"M\": [[1,0]\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.line(), 0);
  }
  EXPECT_THROW(instance_from_json(R"({"n":1,"M":[["x"]],"q":["1"]})"), ParseError);
}
