#pragma once

// Orientations of the n-cube, accessed through a vertex evaluation oracle
// v -> Φ(v). Φ(v)_i = '-' means the edge {v, v⊕i} leaves v.

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "usolab/cube.hpp"
#include "usolab/lcp.hpp"

namespace usolab {

enum class Sign : char { Minus = '-', Plus = '+' };

/// Sign vector at a vertex, packed: bit i-1 set iff Φ(v)_i = '-'.
class Outmap {
public:
  Outmap() = default;
  explicit Outmap(int n) : n_(n) {}
  Outmap(int n, std::uint64_t minus_mask);

  static Outmap parse(std::string_view text);

  int dimension() const noexcept { return n_; }
  std::uint64_t minus_mask() const noexcept { return minus_; }
  Sign sign(int coord) const;
  bool outgoing(int coord) const { return sign(coord) == Sign::Minus; }
  /// The set O of outgoing coordinates.
  CoordSet outgoing_set() const { return CoordSet::from_mask(n_, minus_); }
  int outdegree() const noexcept;
  bool is_sink() const noexcept { return minus_ == 0; }

  /// "+--" style text, coordinate 1 first.
  std::string to_string() const;

  friend bool operator==(const Outmap&, const Outmap&) = default;

private:
  int n_ = 0;
  std::uint64_t minus_ = 0;
};

Outmap cyclic_shift(const Outmap& o, int s);

/// Vertex evaluation oracle. Implementations are pure functions of the vertex
/// and safe to query concurrently.
class Orientation {
public:
  virtual ~Orientation() = default;
  virtual int dimension() const = 0;
  virtual Outmap evaluate(const Vertex& v) const = 0;

  Outmap operator()(const Vertex& v) const { return evaluate(v); }

protected:
  void check_vertex(const Vertex& v) const;
};

using OrientationPtr = std::shared_ptr<const Orientation>;

/// Explicit 2^n-row table of outmaps, indexed by Vertex::bits().
class UsoTable final : public Orientation {
public:
  static constexpr int kMaxTableDimension = 20;

  /// Builds a table after validating edge consistency.
  UsoTable(int n, std::vector<Outmap> rows);

  int dimension() const override { return n_; }
  Outmap evaluate(const Vertex& v) const override;

  const Outmap& at(std::uint64_t index) const { return rows_[index]; }
  std::uint64_t size() const noexcept { return rows_.size(); }
  const std::vector<Outmap>& rows() const noexcept { return rows_; }

  /// Vertex whose outmap is all '+'; throws if there is not exactly one.
  Vertex sink() const;
  /// Vertex whose outmap is all '-'; throws if there is not exactly one.
  Vertex source() const;

  friend bool operator==(const UsoTable& a, const UsoTable& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  int n_;
  std::vector<Outmap> rows_;
};

/// Orientation induced by a nondegenerate P-LCP:
/// v -> v⊕i iff (A_{B(v)}^{-1} q)_i < 0.
class PlcpOrientation final : public Orientation {
public:
  explicit PlcpOrientation(LcpInstance inst) : inst_(std::move(inst)) {}
  int dimension() const override { return inst_.n; }
  Outmap evaluate(const Vertex& v) const override;
  const LcpInstance& instance() const noexcept { return inst_; }

private:
  LcpInstance inst_;
};

/// Morris orientation generated by the two-state transducer.
class MorrisOrientation final : public Orientation {
public:
  explicit MorrisOrientation(int n);
  int dimension() const override { return n_; }
  Outmap evaluate(const Vertex& v) const override;

private:
  int n_;
};

/// v -> v⊕i iff v_i = 0.
class UniformOrientation final : public Orientation {
public:
  explicit UniformOrientation(int n);
  int dimension() const override { return n_; }
  Outmap evaluate(const Vertex& v) const override;

private:
  int n_;
};

/// Φ^(F): edges in coordinates F reversed.
class ReorientedOrientation final : public Orientation {
public:
  ReorientedOrientation(OrientationPtr base, CoordSet flipped);
  int dimension() const override { return base_->dimension(); }
  Outmap evaluate(const Vertex& v) const override;

private:
  OrientationPtr base_;
  CoordSet flipped_;
};

/// Φ restricted to a subcube; free coordinates renumbered 1..k in order.
class RestrictedOrientation final : public Orientation {
public:
  RestrictedOrientation(OrientationPtr base, Subcube face);
  int dimension() const override { return face_.dimension(); }
  Outmap evaluate(const Vertex& v) const override;

  /// The parent-cube vertex corresponding to a local vertex.
  Vertex lift(const Vertex& local) const;

private:
  OrientationPtr base_;
  Subcube face_;
  std::vector<int> free_coords_;
};

/// Ψ(v) = Φ(v ⊕ [n]): 0 and 1 swapped in every vertex label.
class AntipodalOrientation final : public Orientation {
public:
  explicit AntipodalOrientation(OrientationPtr base) : base_(std::move(base)) {}
  int dimension() const override { return base_->dimension(); }
  Outmap evaluate(const Vertex& v) const override;

private:
  OrientationPtr base_;
};

/// Memoizing wrapper that counts distinct vertex evaluations.
class MemoizedOrientation final : public Orientation {
public:
  explicit MemoizedOrientation(OrientationPtr base) : base_(std::move(base)) {}
  int dimension() const override { return base_->dimension(); }
  Outmap evaluate(const Vertex& v) const override;
  std::size_t distinct_evaluations() const;

private:
  OrientationPtr base_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, Outmap> cache_;
};

/// Answers from `primary`, and on every `period`-th query also evaluates
/// `reference` and throws MalformedOrientationError on disagreement.
class CrossCheckedOrientation final : public Orientation {
public:
  CrossCheckedOrientation(OrientationPtr primary, OrientationPtr reference, std::uint64_t period);
  int dimension() const override { return primary_->dimension(); }
  Outmap evaluate(const Vertex& v) const override;
  std::uint64_t queries() const noexcept { return queries_.load(); }
  std::uint64_t checks() const noexcept { return checks_.load(); }

private:
  OrientationPtr primary_;
  OrientationPtr reference_;
  std::uint64_t period_;
  mutable std::atomic<std::uint64_t> queries_{0};
  mutable std::atomic<std::uint64_t> checks_{0};
};

Outmap plcp_outmap(const LcpInstance& inst, const Vertex& v);

/// Bidiagonal-plus-corner Morris matrix (1 on the diagonal, 2 above it and in
/// the bottom-left corner) with q = (-1, ..., -1). n must be odd, n >= 3.
LcpInstance morris_instance(int n);

/// Transducer evaluation of the Morris orientation.
Outmap morris_outmap(int n, const Vertex& v);
/// Same, reading starts just left of the chosen zero coordinate `start`.
Outmap morris_outmap(int n, const Vertex& v, int start);

OrientationPtr plcp(LcpInstance inst);
OrientationPtr morris(int n);
OrientationPtr uniform(int n);
OrientationPtr reorient(OrientationPtr o, const CoordSet& flipped);
OrientationPtr restrict_to(OrientationPtr o, const Subcube& face);
OrientationPtr antipodal_relabel(OrientationPtr o);

/// Evaluates every vertex; throws MalformedOrientationError with the first
/// inconsistent edge.
UsoTable tabulate(const Orientation& o);
/// Tabulates an LCP orientation with incremental basis updates along a Gray
/// code instead of 2^n independent solves.
UsoTable tabulate_plcp(const LcpInstance& inst);

/// Table file: first line n, then 2^n lines "bits signs" in lexicographic order.
std::string table_to_text(const UsoTable& t);
UsoTable table_from_text(const std::string& text);
UsoTable read_table(const std::string& path);
void write_table(const UsoTable& t, const std::string& path);

}  // namespace usolab
