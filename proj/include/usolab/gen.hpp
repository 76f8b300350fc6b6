#pragma once

// Seeded instance and orientation generators.

#include <cstdint>
#include <string>

#include "usolab/lcp.hpp"
#include "usolab/uso.hpp"

namespace usolab {

enum class Family { Morris, RandomK, RandomP, Uniform, RandomOrientation };

Family parse_family(const std::string& name);
std::string family_name(Family f);

enum class PStrategy { Gram, KPpt };

struct GenSpec {
  Family family = Family::Morris;
  int n = 3;
  std::uint64_t seed = 0;
  /// Integer entries are drawn from [-range, range] (or [-range, 0]).
  long range = 3;
  PStrategy strategy = PStrategy::KPpt;
};

/// Off-diagonal entries in [-range, 0]; diagonal = |row off-diagonal sum| + m
/// with m in [1, range]. Strictly diagonally dominant, hence a K-matrix.
RatMatrix gen_k_matrix(int n, std::uint64_t seed, long range = 3);

/// Gram: G G^T + I with G in [-range, range]^{n x n}.
/// KPpt: principal pivot transform of gen_k_matrix on a random index set.
RatMatrix gen_p_matrix(int n, std::uint64_t seed, PStrategy strategy, long range = 3);

/// Nonzero integer entries in [-range, range], redrawn until the instance is
/// nondegenerate (checked for n <= 12). Throws GenerationError when the
/// budget runs out.
RatVector gen_q(const RatMatrix& m, std::uint64_t seed, long range = 5, int budget = 1000);

/// One fair coin per cube edge. Edge consistent, usually not a USO.
UsoTable gen_random_orientation(int n, std::uint64_t seed);

/// M = I, q = -1: the uniform orientation.
LcpInstance uniform_instance(int n);

/// Instance for the morris, random-k, random-p and uniform families.
LcpInstance generate_instance(const GenSpec& spec);

}  // namespace usolab
