#include "usolab/cube.hpp"

#include <algorithm>
#include <bit>

#include "usolab/errors.hpp"

namespace usolab {

std::uint64_t rotate_mask(int n, std::uint64_t mask, int s) noexcept {
  if (n <= 0) return 0;
  s %= n;
  if (s < 0) s += n;
  if (s == 0) return mask & full_mask(n);
  const std::uint64_t m = mask & full_mask(n);
  return ((m << s) | (m >> (n - s))) & full_mask(n);
}

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension)
    throw RangeError("dimension " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxDimension));
}

// ---------------------------------------------------------------- CoordSet

CoordSet::CoordSet(int n) : n_(n) {
  if (n < 0 || n > kMaxDimension) throw RangeError("bad dimension " + std::to_string(n));
}

CoordSet::CoordSet(int n, std::initializer_list<int> coords) : CoordSet(n) {
  for (int c : coords) insert(c);
}

CoordSet::CoordSet(int n, const std::vector<int>& coords) : CoordSet(n) {
  for (int c : coords) insert(c);
}

CoordSet CoordSet::from_mask(int n, std::uint64_t mask) {
  CoordSet s(n);
  if (mask & ~full_mask(n)) throw RangeError("coordinate mask exceeds dimension");
  s.mask_ = mask;
  return s;
}

CoordSet CoordSet::all(int n) { return from_mask(n, full_mask(n)); }

int CoordSet::size() const noexcept { return std::popcount(mask_); }

void CoordSet::check_coord(int coord) const {
  if (coord < 1 || coord > n_)
    throw RangeError("coordinate " + std::to_string(coord) + " outside 1.." +
                     std::to_string(n_));
}

bool CoordSet::contains(int coord) const {
  check_coord(coord);
  return (mask_ >> (coord - 1)) & 1u;
}

void CoordSet::insert(int coord) {
  check_coord(coord);
  mask_ |= std::uint64_t{1} << (coord - 1);
}

void CoordSet::erase(int coord) {
  check_coord(coord);
  mask_ &= ~(std::uint64_t{1} << (coord - 1));
}

std::vector<int> CoordSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

int CoordSet::min() const {
  if (mask_ == 0) throw RangeError("min of empty coordinate set");
  return std::countr_zero(mask_) + 1;
}

namespace {
void require_same(int a, int b) {
  if (a != b) throw RangeError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace

CoordSet CoordSet::operator^(const CoordSet& o) const {
  require_same(n_, o.n_);
  return from_mask_unchecked(n_, mask_ ^ o.mask_);
}

CoordSet CoordSet::operator&(const CoordSet& o) const {
  require_same(n_, o.n_);
  return from_mask_unchecked(n_, mask_ & o.mask_);
}

CoordSet CoordSet::operator|(const CoordSet& o) const {
  require_same(n_, o.n_);
  return from_mask_unchecked(n_, mask_ | o.mask_);
}

std::string CoordSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int c : members()) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

// ------------------------------------------------------------------ Vertex

void Vertex::check_dimension_allow_zero(int n) {
  if (n < 0 || n > kMaxDimension) throw RangeError("bad dimension " + std::to_string(n));
}

Vertex::Vertex(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_dimension_allow_zero(n);
  if (bits & ~full_mask(n)) throw RangeError("vertex bits exceed dimension");
}

Vertex Vertex::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxDimension))
    throw ParseError("vertex bit string must have 1.." + std::to_string(kMaxDimension) +
                     " characters");
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '1')
      bits |= std::uint64_t{1} << j;
    else if (text[j] != '0')
      throw ParseError("invalid vertex character '" + std::string(1, text[j]) + "'", 1,
                       static_cast<int>(j) + 1);
  }
  return Vertex(static_cast<int>(text.size()), bits);
}

int Vertex::bit(int coord) const {
  if (coord < 1 || coord > n_) throw RangeError("coordinate " + std::to_string(coord) + " out of range");
  return static_cast<int>((bits_ >> (coord - 1)) & 1u);
}

int Vertex::weight() const noexcept { return std::popcount(bits_); }

std::string Vertex::to_string() const {
  std::string s(n_, '0');
  for (int j = 0; j < n_; ++j)
    if ((bits_ >> j) & 1u) s[j] = '1';
  return s;
}

Vertex flip(const Vertex& v, const CoordSet& coords) {
  require_same(v.dimension(), coords.dimension());
  return Vertex(v.dimension(), v.bits() ^ coords.mask());
}

Vertex flip(const Vertex& v, int coord) {
  if (coord < 1 || coord > v.dimension())
    throw RangeError("coordinate " + std::to_string(coord) + " out of range");
  return Vertex(v.dimension(), v.bits() ^ (std::uint64_t{1} << (coord - 1)));
}

int hamming(const Vertex& a, const Vertex& b) {
  require_same(a.dimension(), b.dimension());
  return std::popcount(a.bits() ^ b.bits());
}

Vertex cyclic_shift(const Vertex& v, int s) {
  return Vertex(v.dimension(), rotate_mask(v.dimension(), v.bits(), s));
}

// ----------------------------------------------------------------- Subcube

Subcube::Subcube(const Vertex& base, const CoordSet& free)
    : base_(base.dimension(), base.bits() & ~free.mask()), free_(free) {
  require_same(base.dimension(), free.dimension());
}

bool Subcube::contains(const Vertex& v) const {
  return v.dimension() == base_.dimension() && (v.bits() & ~free_.mask()) == base_.bits();
}

std::vector<Vertex> Subcube::vertices() const {
  std::vector<Vertex> out;
  out.reserve(cardinality());
  for_each_submask(free_.mask(), [&](std::uint64_t sub) {
    out.emplace_back(base_.dimension(), base_.bits() | sub);
  });
  std::reverse(out.begin(), out.end());
  return out;
}

std::string Subcube::to_string() const {
  std::string s = base_.to_string();
  for (int c : free_.members()) s[c - 1] = '*';
  return s;
}

void for_each_subcube(int n, const std::function<void(const Subcube&)>& visit) {
  check_dimension(n);
  const std::uint64_t all = full_mask(n);
  for (std::uint64_t free = 0; free <= all; ++free) {
    const CoordSet fs = CoordSet::from_mask(n, free);
    for_each_submask(all & ~free, [&](std::uint64_t base) {
      visit(Subcube(Vertex(n, base), fs));
    });
    if (free == all) break;
  }
}

std::vector<Subcube> enumerate_subcubes(int n) {
  std::vector<Subcube> out;
  for_each_subcube(n, [&](const Subcube& s) { out.push_back(s); });
  return out;
}

}  // namespace usolab
