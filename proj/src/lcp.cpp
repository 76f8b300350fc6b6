#include "usolab/lcp.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "usolab/errors.hpp"

namespace usolab {

LcpInstance::LcpInstance(RatMatrix m, RatVector q_) : M(std::move(m)), q(std::move(q_)) {
  if (!M.square() || M.rows() == 0) throw RangeError("M must be square and nonempty");
  if (q.size() != M.rows()) throw RangeError("q length does not match M");
  n = static_cast<int>(M.rows());
  check_dimension(n);
}

namespace {

void require_dims(const LcpInstance& inst, const CoordSet& s) {
  if (s.dimension() != inst.n)
    throw RangeError("index set of dimension " + std::to_string(s.dimension()) +
                     " used with instance of dimension " + std::to_string(inst.n));
}

}  // namespace

RatMatrix basis_matrix(const LcpInstance& inst, const Basis& b) {
  require_dims(inst, b);
  const auto n = static_cast<std::size_t>(inst.n);
  RatMatrix a = RatMatrix::identity(n);
  for (int c : b.members()) {
    const auto j = static_cast<std::size_t>(c - 1);
    for (std::size_t i = 0; i < n; ++i) a(i, j) = -inst.M(i, j);
  }
  return a;
}

RatVector basis_solution(const LcpInstance& inst, const Basis& b) {
  try {
    return rat_solve(basis_matrix(inst, b), inst.q);
  } catch (const SingularMatrixError& e) {
    throw NotPMatrixError("basis matrix A_" + b.to_string() +
                          " is singular, so M is not a P-matrix (" + e.what() + ")");
  }
}

LcpSolution extract_solution(const LcpInstance& inst, const Basis& b) {
  const RatVector x = basis_solution(inst, b);
  LcpSolution sol{RatVector(inst.n), RatVector(inst.n)};
  for (int i = 1; i <= inst.n; ++i) {
    const Rational& xi = x[i - 1];
    if (xi.sign() < 0)
      throw NotASolutionError("basis " + b.to_string() + " has negative coordinate " +
                                  std::to_string(i) + " (" + xi.to_string() + ")",
                              i);
    (b.contains(i) ? sol.z : sol.w)[i - 1] = xi;
  }
  return sol;
}

bool check_solution(const LcpInstance& inst, const LcpSolution& sol) {
  const auto n = static_cast<std::size_t>(inst.n);
  if (sol.w.size() != n || sol.z.size() != n) throw RangeError("solution dimension mismatch");
  Rational complementarity;
  for (std::size_t i = 0; i < n; ++i) {
    if (sol.w[i].sign() < 0 || sol.z[i].sign() < 0) return false;
    complementarity += sol.w[i] * sol.z[i];
  }
  if (!complementarity.is_zero()) return false;
  const RatVector mz = inst.M * sol.z;
  for (std::size_t i = 0; i < n; ++i)
    if (sol.w[i] - mz[i] != inst.q[i]) return false;
  return true;
}

namespace {

void require_exhaustive(std::size_t n, int limit, const char* what) {
  if (static_cast<long>(n) > limit)
    throw CapabilityError(std::string(what) + " enumerates 2^n subsets; n=" + std::to_string(n) +
                          " exceeds the limit " + std::to_string(limit));
}

}  // namespace

bool is_p_matrix(const RatMatrix& m, int limit) {
  if (!m.square() || m.rows() == 0) throw RangeError("P-matrix test needs a square matrix");
  const std::size_t n = m.rows();
  require_exhaustive(n, limit, "is_p_matrix");
  const std::uint64_t all = full_mask(static_cast<int>(n));
  for (std::uint64_t s = 1; s <= all; ++s) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i) & 1u) idx.push_back(static_cast<int>(i));
    if (rat_det(m.select(idx, idx)).sign() <= 0) return false;
  }
  return true;
}

bool is_k_matrix(const RatMatrix& m, int limit) {
  if (!m.square() || m.rows() == 0) throw RangeError("K-matrix test needs a square matrix");
  require_exhaustive(m.rows(), limit, "is_k_matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j).sign() > 0) return false;
  return is_p_matrix(m, limit);
}

bool is_nondegenerate(const LcpInstance& inst, int limit) {
  require_exhaustive(static_cast<std::size_t>(inst.n), limit, "is_nondegenerate");
  BasisTableau tab(inst);
  const std::uint64_t count = std::uint64_t{1} << inst.n;
  // Reflected Gray code: consecutive bases differ in one coordinate.
  for (std::uint64_t k = 0; k < count; ++k) {
    if (k > 0) tab.toggle(std::countr_zero(k) + 1);
    for (const Rational& x : tab.solution())
      if (x.is_zero()) return false;
  }
  return true;
}

RatMatrix principal_pivot_transform(const RatMatrix& m, const CoordSet& alpha) {
  if (!m.square() || static_cast<int>(m.rows()) != alpha.dimension())
    throw RangeError("PPT index set does not match the matrix");
  if (alpha.empty()) return m;
  std::vector<int> in, out;
  for (int i = 1; i <= alpha.dimension(); ++i) (alpha.contains(i) ? in : out).push_back(i - 1);

  const RatMatrix a = m.select(in, in);
  RatMatrix a_inv;
  try {
    a_inv = rat_inverse(a);
  } catch (const SingularMatrixError& e) {
    throw SingularMatrixError("principal submatrix M[alpha,alpha] is singular for alpha=" +
                                  alpha.to_string(),
                              e.column());
  }
  const RatMatrix b = m.select(in, out);
  const RatMatrix c = m.select(out, in);
  const RatMatrix d = m.select(out, out);
  const RatMatrix a_inv_b = a_inv * b;
  const RatMatrix c_a_inv = c * a_inv;
  const RatMatrix schur = c * a_inv_b;

  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (std::size_t j = 0; j < in.size(); ++j) r(in[i], in[j]) = a_inv(i, j);
    for (std::size_t j = 0; j < out.size(); ++j) r(in[i], out[j]) = -a_inv_b(i, j);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < in.size(); ++j) r(out[i], in[j]) = c_a_inv(i, j);
    for (std::size_t j = 0; j < out.size(); ++j) r(out[i], out[j]) = d(i, j) - schur(i, j);
  }
  return r;
}

RatVector pivot_rhs(const LcpInstance& inst, const CoordSet& alpha) {
  return basis_solution(inst, alpha);
}

LcpInstance pivot_instance(const LcpInstance& inst, const CoordSet& alpha) {
  return LcpInstance(principal_pivot_transform(inst.M, alpha), pivot_rhs(inst, alpha));
}

// ------------------------------------------------------------ BasisTableau

BasisTableau::BasisTableau(const LcpInstance& inst)
    : inst_(inst),
      basis_(inst.n),
      inverse_(RatMatrix::identity(static_cast<std::size_t>(inst.n))),
      x_(inst.q) {}

void BasisTableau::toggle(int coord) {
  const auto n = static_cast<std::size_t>(inst_.n);
  const auto col = static_cast<std::size_t>(coord - 1);
  const bool entering_m = !basis_.contains(coord);

  // d = A_B^{-1} a', where a' is the new column `coord`.
  RatVector d(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (entering_m) {
      Rational acc;
      for (std::size_t k = 0; k < n; ++k)
        if (!inst_.M(k, col).is_zero()) acc -= inverse_(r, k) * inst_.M(k, col);
      d[r] = std::move(acc);
    } else {
      d[r] = inverse_(r, col);
    }
  }
  if (d[col].is_zero())
    throw NotPMatrixError("basis matrix becomes singular when toggling coordinate " +
                          std::to_string(coord));

  const Rational pivot = d[col];
  for (std::size_t k = 0; k < n; ++k) inverse_(col, k) /= pivot;
  x_[col] /= pivot;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == col || d[r].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k)
      if (!inverse_(col, k).is_zero()) inverse_(r, k) -= d[r] * inverse_(col, k);
    x_[r] -= d[r] * x_[col];
  }
  if (entering_m)
    basis_.insert(coord);
  else
    basis_.erase(coord);
}

// -------------------------------------------------------------------- JSON

using nlohmann::json;

std::string instance_to_json(const LcpInstance& inst) {
  // One matrix row per line.
  std::string out = "{\n  \"n\": " + std::to_string(inst.n) + ",\n  \"M\": [";
  for (int i = 0; i < inst.n; ++i) {
    json row = json::array();
    for (int j = 0; j < inst.n; ++j) row.push_back(inst.M(i, j).to_string());
    out += (i ? ",\n    " : "\n    ") + row.dump();
  }
  json q = json::array();
  for (const auto& x : inst.q) q.push_back(x.to_string());
  out += "\n  ],\n  \"q\": " + q.dump() + "\n}\n";
  return out;
}

namespace {

Rational rational_from_json(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("matrix and vector entries must be rational strings");
}

}  // namespace

LcpInstance instance_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; translate it to line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
    throw ParseError(e.what(), static_cast<int>(line), static_cast<int>(col));
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("M") || !doc.contains("q"))
    throw ParseError("instance JSON needs keys n, M and q");
  if (!doc["n"].is_number_integer()) throw ParseError("n must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxDimension) throw ParseError("n out of range");
  const json& m = doc["M"];
  const json& q = doc["q"];
  if (!m.is_array() || m.size() != static_cast<std::size_t>(n))
    throw ParseError("M must have n rows");
  if (!q.is_array() || q.size() != static_cast<std::size_t>(n))
    throw ParseError("q must have n entries");
  RatMatrix mat(n, n);
  for (int i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != static_cast<std::size_t>(n))
      throw ParseError("row " + std::to_string(i + 1) + " of M must have n entries");
    for (int j = 0; j < n; ++j) mat(i, j) = rational_from_json(m[i][j]);
  }
  RatVector rhs;
  for (int i = 0; i < n; ++i) rhs.push_back(rational_from_json(q[i]));
  return LcpInstance(std::move(mat), std::move(rhs));
}

LcpInstance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return instance_from_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_instance(const LcpInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write instance file " + path);
  out << instance_to_json(inst);
}

}  // namespace usolab
