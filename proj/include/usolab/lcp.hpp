#pragma once

// Linear complementarity problems LCP(M, q): find w, z >= 0 with
// w - Mz = q and w^T z = 0.

#include <string>

#include "usolab/cube.hpp"
#include "usolab/exact.hpp"

namespace usolab {

/// Exhaustive matrix-class predicates refuse dimensions above this.
inline constexpr int kDefaultExhaustiveLimit = 12;

struct LcpInstance {
  LcpInstance() = default;
  LcpInstance(RatMatrix m, RatVector q);

  int n = 0;
  RatMatrix M;
  RatVector q;
};

/// A basis is the set of coordinates whose column is taken from -M.
using Basis = CoordSet;

struct LcpSolution {
  RatVector w;
  RatVector z;
};

/// Column i is -M e_i for i in B and e_i otherwise.
RatMatrix basis_matrix(const LcpInstance& inst, const Basis& b);

/// A_B^{-1} q. Throws NotPMatrixError if A_B is singular.
RatVector basis_solution(const LcpInstance& inst, const Basis& b);

/// Reads (w, z) off a basis whose solution is nonnegative.
LcpSolution extract_solution(const LcpInstance& inst, const Basis& b);

/// Exact check of w - Mz = q, w, z >= 0 and w^T z = 0.
bool check_solution(const LcpInstance& inst, const LcpSolution& sol);

/// All 2^n - 1 principal minors positive.
bool is_p_matrix(const RatMatrix& m, int limit = kDefaultExhaustiveLimit);

/// P-matrix with nonpositive off-diagonal entries.
bool is_k_matrix(const RatMatrix& m, int limit = kDefaultExhaustiveLimit);

/// No basis solution has a zero coordinate. Requires a P-matrix.
bool is_nondegenerate(const LcpInstance& inst, int limit = kDefaultExhaustiveLimit);

/// Principal pivotal transform of M on the index set alpha. With
/// A = M[a,a], B = M[a,a'], C = M[a',a], D = M[a',a'] the result is
///   [ A^-1      -A^-1 B       ]
///   [ C A^-1    D - C A^-1 B  ]
/// written back into the original index positions.
RatMatrix principal_pivot_transform(const RatMatrix& m, const CoordSet& alpha);

/// Right-hand side that accompanies M under a pivot on alpha: A_alpha^{-1} q.
RatVector pivot_rhs(const LcpInstance& inst, const CoordSet& alpha);

/// The instance (PPT(M, alpha), A_alpha^{-1} q). Its induced orientation is
/// that of `inst` with vertex labels XOR-ed by alpha.
LcpInstance pivot_instance(const LcpInstance& inst, const CoordSet& alpha);

/// Maintains A_B^{-1} and A_B^{-1} q while the basis changes one coordinate
/// at a time, with O(n^2) exact work per toggle.
class BasisTableau {
public:
  explicit BasisTableau(const LcpInstance& inst);

  const Basis& basis() const noexcept { return basis_; }
  const RatVector& solution() const noexcept { return x_; }

  /// Moves to basis B ⊕ {coord} (1-based).
  void toggle(int coord);

private:
  LcpInstance inst_;
  Basis basis_;
  RatMatrix inverse_;
  RatVector x_;
};

// JSON instance files: {"n": int, "M": [[str,...],...], "q": [str,...]}.
std::string instance_to_json(const LcpInstance& inst);
LcpInstance instance_from_json(const std::string& text);
LcpInstance read_instance(const std::string& path);
void write_instance(const LcpInstance& inst, const std::string& path);

}  // namespace usolab
