#pragma once

// Combinatorics of the n-cube {0,1}^n.
//
// Coordinates are numbered 1..n everywhere in the public interface. Vertices
// and coordinate sets are packed into one 64-bit word (coordinate j lives in
// bit j-1), which limits the ambient dimension to 63.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace usolab {

inline constexpr int kMaxDimension = 63;

/// Mask with the low n bits set.
constexpr std::uint64_t full_mask(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Rotates the low n bits of `mask` so that bit j moves to bit (j+s) mod n.
std::uint64_t rotate_mask(int n, std::uint64_t mask, int s) noexcept;

void check_dimension(int n);

/// A subset of the coordinates {1..n}.
class CoordSet {
public:
  CoordSet() = default;
  explicit CoordSet(int n);
  CoordSet(int n, std::initializer_list<int> coords);
  CoordSet(int n, const std::vector<int>& coords);

  static CoordSet from_mask(int n, std::uint64_t mask);
  static CoordSet all(int n);

  int dimension() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(int coord) const;

  void insert(int coord);
  void erase(int coord);

  /// Members in increasing order.
  std::vector<int> members() const;
  /// Smallest member; the set must be nonempty.
  int min() const;

  CoordSet complement() const noexcept { return from_mask_unchecked(n_, ~mask_ & full_mask(n_)); }
  CoordSet operator^(const CoordSet& o) const;
  CoordSet operator&(const CoordSet& o) const;
  CoordSet operator|(const CoordSet& o) const;

  friend bool operator==(const CoordSet&, const CoordSet&) = default;

  /// "{1,3}" style text.
  std::string to_string() const;

private:
  static CoordSet from_mask_unchecked(int n, std::uint64_t mask) noexcept {
    CoordSet s;
    s.n_ = n;
    s.mask_ = mask;
    return s;
  }
  void check_coord(int coord) const;

  int n_ = 0;
  std::uint64_t mask_ = 0;
};

/// A vertex of the n-cube. Text form: leftmost character is coordinate 1.
class Vertex {
public:
  Vertex() = default;
  explicit Vertex(int n) : n_(n) { check_dimension_allow_zero(n); }
  Vertex(int n, std::uint64_t bits);

  static Vertex zeros(int n) { return Vertex(n); }
  static Vertex ones(int n) { return Vertex(n, full_mask(n)); }
  /// Parses a '0'/'1' string, e.g. "101".
  static Vertex parse(std::string_view text);

  int dimension() const noexcept { return n_; }
  /// Packed bits; also the vertex's index in a 2^n table.
  std::uint64_t bits() const noexcept { return bits_; }
  int bit(int coord) const;
  int weight() const noexcept;

  /// The set B(v) of coordinates equal to 1.
  CoordSet ones_set() const { return CoordSet::from_mask(n_, bits_); }
  CoordSet zeros_set() const { return CoordSet::from_mask(n_, ~bits_ & full_mask(n_)); }

  std::string to_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex& a, const Vertex& b) {
    return a.bits_ <=> b.bits_;
  }

private:
  static void check_dimension_allow_zero(int n);

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

Vertex flip(const Vertex& v, const CoordSet& coords);
Vertex flip(const Vertex& v, int coord);
int hamming(const Vertex& a, const Vertex& b);

/// Coordinate j of the input lands on coordinate ((j+s-1) mod n)+1.
Vertex cyclic_shift(const Vertex& v, int s);

/// {base ⊕ I : I ⊆ free}. The base is normalized to 0 on free coordinates.
class Subcube {
public:
  Subcube(const Vertex& base, const CoordSet& free);

  const Vertex& base() const noexcept { return base_; }
  const CoordSet& free() const noexcept { return free_; }
  int dimension() const noexcept { return free_.size(); }
  std::uint64_t cardinality() const noexcept { return std::uint64_t{1} << free_.size(); }
  bool contains(const Vertex& v) const;
  std::vector<Vertex> vertices() const;

  /// "1*0" style text: '*' marks a free coordinate.
  std::string to_string() const;

  friend bool operator==(const Subcube&, const Subcube&) = default;

private:
  Vertex base_;
  CoordSet free_;
};

/// Calls `visit` once for each of the 3^n subcubes, ordered by free-set mask
/// and then by base.
void for_each_subcube(int n, const std::function<void(const Subcube&)>& visit);
std::vector<Subcube> enumerate_subcubes(int n);

/// Visits every submask of `mask`, including 0 and `mask` itself.
template <typename F>
void for_each_submask(std::uint64_t mask, F&& f) {
  std::uint64_t sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

}  // namespace usolab
