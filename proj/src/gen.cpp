#include "usolab/gen.hpp"

#include "usolab/errors.hpp"
#include "usolab/random.hpp"

namespace usolab {

namespace {

const std::pair<Family, const char*> kFamilies[] = {
    {Family::Morris, "morris"},
    {Family::RandomK, "random-k"},
    {Family::RandomP, "random-p"},
    {Family::Uniform, "uniform"},
    {Family::RandomOrientation, "random-orientation"},
};

void check_range(long range) {
  if (range < 1) throw RangeError("entry range must be at least 1");
}

}  // namespace

Family parse_family(const std::string& name) {
  for (const auto& [f, s] : kFamilies)
    if (name == s) return f;
  throw RangeError("unknown family \"" + name + "\"");
}

std::string family_name(Family f) {
  for (const auto& [g, s] : kFamilies)
    if (g == f) return s;
  return "unknown";
}

RatMatrix gen_k_matrix(int n, std::uint64_t seed, long range) {
  check_dimension(n);
  check_range(range);
  Rng rng(seed);
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    long off = 0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const long x = rng.range(-range, 0);
      m(i, j) = Rational(x);
      off -= x;
    }
    m(i, i) = Rational(off + rng.range(1, range));
  }
  return m;
}

RatMatrix gen_p_matrix(int n, std::uint64_t seed, PStrategy strategy, long range) {
  check_dimension(n);
  check_range(range);
  if (strategy == PStrategy::Gram) {
    Rng rng(seed);
    RatMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = Rational(rng.range(-range, range));
    RatMatrix m = RatMatrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m(i, j) += g(i, k) * g(j, k);
    return m;
  }
  const RatMatrix k = gen_k_matrix(n, derive_seed(seed, 1), range);
  Rng rng(derive_seed(seed, 2));
  CoordSet alpha(n);
  for (int i = 1; i <= n; ++i)
    if (rng.coin()) alpha.insert(i);
  return principal_pivot_transform(k, alpha);
}

RatVector gen_q(const RatMatrix& m, std::uint64_t seed, long range, int budget) {
  check_range(range);
  const int n = static_cast<int>(m.rows());
  Rng rng(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    RatVector q(n);
    for (auto& x : q) {
      long v = rng.range(-range, range - 1);
      if (v >= 0) ++v;
      x = Rational(v);
    }
    if (n > kDefaultExhaustiveLimit) return q;
    if (is_nondegenerate(LcpInstance(m, q))) return q;
  }
  throw GenerationError("no nondegenerate right-hand side found in " + std::to_string(budget) + " draws");
}

UsoTable gen_random_orientation(int n, std::uint64_t seed) {
  check_dimension(n);
  if (n > UsoTable::kMaxTableDimension) throw CapabilityError("orientation table too large");
  Rng rng(seed);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> minus(count, 0);
  for (std::uint64_t v = 0; v < count; ++v)
    for (int i = 0; i < n; ++i) {
      const std::uint64_t b = std::uint64_t{1} << i;
      if (v & b) continue;
      if (rng.coin())
        minus[v] |= b;
      else
        minus[v | b] |= b;
    }
  std::vector<Outmap> rows;
  rows.reserve(count);
  for (std::uint64_t m : minus) rows.emplace_back(n, m);
  return UsoTable(n, std::move(rows));
}

LcpInstance uniform_instance(int n) {
  check_dimension(n);
  return LcpInstance(RatMatrix::identity(n), RatVector(n, Rational(-1)));
}

LcpInstance generate_instance(const GenSpec& spec) {
  switch (spec.family) {
    case Family::Morris:
      return morris_instance(spec.n);
    case Family::Uniform:
      return uniform_instance(spec.n);
    case Family::RandomK: {
      RatMatrix m = gen_k_matrix(spec.n, derive_seed(spec.seed, 10), spec.range);
      RatVector q = gen_q(m, derive_seed(spec.seed, 11), spec.range + 2);
      return LcpInstance(std::move(m), std::move(q));
    }
    case Family::RandomP: {
      RatMatrix m = gen_p_matrix(spec.n, derive_seed(spec.seed, 20), spec.strategy, spec.range);
      RatVector q = gen_q(m, derive_seed(spec.seed, 21), spec.range + 2);
      return LcpInstance(std::move(m), std::move(q));
    }
    case Family::RandomOrientation:
      break;
  }
  throw RangeError("family " + family_name(spec.family) + " does not describe an LCP instance");
}

}  // namespace usolab
