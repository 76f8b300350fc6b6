#include "usolab/uso.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "usolab/errors.hpp"

namespace usolab {

// ------------------------------------------------------------------ Outmap

Outmap::Outmap(int n, std::uint64_t minus_mask) : n_(n), minus_(minus_mask) {
  if (n < 0 || n > kMaxDimension) throw RangeError("bad outmap dimension");
  if (minus_mask & ~full_mask(n)) throw RangeError("outmap mask exceeds dimension");
}

Outmap Outmap::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxDimension)) throw ParseError("outmap too long");
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '-')
      mask |= std::uint64_t{1} << j;
    else if (text[j] != '+')
      throw ParseError("invalid sign character '" + std::string(1, text[j]) + "'", 1,
                       static_cast<int>(j) + 1);
  }
  return Outmap(static_cast<int>(text.size()), mask);
}

Sign Outmap::sign(int coord) const {
  if (coord < 1 || coord > n_) throw RangeError("coordinate " + std::to_string(coord) + " out of range");
  return ((minus_ >> (coord - 1)) & 1u) ? Sign::Minus : Sign::Plus;
}

int Outmap::outdegree() const noexcept { return std::popcount(minus_); }

std::string Outmap::to_string() const {
  std::string s(n_, '+');
  for (int j = 0; j < n_; ++j)
    if ((minus_ >> j) & 1u) s[j] = '-';
  return s;
}

Outmap cyclic_shift(const Outmap& o, int s) {
  return Outmap(o.dimension(), rotate_mask(o.dimension(), o.minus_mask(), s));
}

void Orientation::check_vertex(const Vertex& v) const {
  if (v.dimension() != dimension())
    throw RangeError("vertex " + v.to_string() + " has dimension " + std::to_string(v.dimension()) +
                     ", orientation has " + std::to_string(dimension()));
}

// ---------------------------------------------------------------- UsoTable

UsoTable::UsoTable(int n, std::vector<Outmap> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 0 || n > kMaxTableDimension)
    throw CapabilityError("tables are limited to n <= " + std::to_string(kMaxTableDimension));
  if (rows_.size() != (std::uint64_t{1} << n)) throw RangeError("table must have 2^n rows");
  for (const auto& r : rows_)
    if (r.dimension() != n) throw RangeError("outmap dimension mismatch in table");
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t v = 0; v < rows_.size(); ++v) {
      if (v & bit) continue;
      const bool out_lo = rows_[v].minus_mask() & bit;
      const bool out_hi = rows_[v | bit].minus_mask() & bit;
      if (out_lo == out_hi)
        throw MalformedOrientationError(
            "inconsistent edge between " + Vertex(n, v).to_string() + " and " +
            Vertex(n, v | bit).to_string() + " in coordinate " + std::to_string(i + 1) + ": both " +
            (out_lo ? "outgoing" : "incoming"));
    }
  }
}

Outmap UsoTable::evaluate(const Vertex& v) const {
  check_vertex(v);
  return rows_[v.bits()];
}

Vertex UsoTable::sink() const {
  std::uint64_t found = 0, count = 0;
  for (std::uint64_t v = 0; v < rows_.size(); ++v)
    if (rows_[v].minus_mask() == 0) { found = v; ++count; }
  if (count != 1) throw DependencyError("orientation has " + std::to_string(count) + " global sinks");
  return Vertex(n_, found);
}

Vertex UsoTable::source() const {
  std::uint64_t found = 0, count = 0;
  for (std::uint64_t v = 0; v < rows_.size(); ++v)
    if (rows_[v].minus_mask() == full_mask(n_)) { found = v; ++count; }
  if (count != 1) throw DependencyError("orientation has " + std::to_string(count) + " global sources");
  return Vertex(n_, found);
}

// ----------------------------------------------------------------- oracles

Outmap plcp_outmap(const LcpInstance& inst, const Vertex& v) {
  if (v.dimension() != inst.n) throw RangeError("vertex dimension does not match instance");
  const Basis b = v.ones_set();
  const RatVector x = basis_solution(inst, b);
  std::uint64_t minus = 0;
  for (int i = 0; i < inst.n; ++i) {
    const int s = x[i].sign();
    if (s == 0)
      throw DegeneracyError("degenerate instance: (A_B^{-1} q)_" + std::to_string(i + 1) +
                                " = 0 for B = " + b.to_string(),
                            b.to_string(), i + 1);
    if (s < 0) minus |= std::uint64_t{1} << i;
  }
  return Outmap(inst.n, minus);
}

Outmap PlcpOrientation::evaluate(const Vertex& v) const {
  check_vertex(v);
  return plcp_outmap(inst_, v);
}

namespace {

void require_odd(int n) {
  if (n < 3 || n % 2 == 0)
    throw ParityError("Morris orientations need an odd dimension n >= 3, got " + std::to_string(n));
  check_dimension(n);
}

}  // namespace

LcpInstance morris_instance(int n) {
  require_odd(n);
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1;
    if (i + 1 < n) m(i, i + 1) = 2;
  }
  m(n - 1, 0) = 2;
  return LcpInstance(std::move(m), RatVector(n, Rational(-1)));
}

Outmap morris_outmap(int n, const Vertex& v, int start) {
  require_odd(n);
  if (v.dimension() != n) throw RangeError("vertex dimension does not match Morris dimension");
  if (v.bits() == full_mask(n)) return Outmap(n, 0);
  if (v.bit(start) != 0) throw RangeError("transducer must start at a zero coordinate");
  // Reads coordinates start-1, start-2, ..., 1, n, ..., start.
  // (S,1) -> T '+'; (T,1) -> S '-'; (S,0) -> S '-'; (T,0) -> S '+'.
  bool in_t = false;
  std::uint64_t minus = 0;
  int j = start - 1;
  for (int step = 0; step < n; ++step) {
    if (j < 1) j = n;
    const bool one = (v.bits() >> (j - 1)) & 1u;
    bool emit_minus;
    if (one) {
      emit_minus = in_t;
      in_t = !in_t;
    } else {
      emit_minus = !in_t;
      in_t = false;
    }
    if (emit_minus) minus |= std::uint64_t{1} << (j - 1);
    --j;
  }
  return Outmap(n, minus);
}

Outmap morris_outmap(int n, const Vertex& v) {
  require_odd(n);
  if (v.dimension() != n) throw RangeError("vertex dimension does not match Morris dimension");
  if (v.bits() == full_mask(n)) return Outmap(n, 0);
  const int first_zero = std::countr_zero(~v.bits()) + 1;
  return morris_outmap(n, v, first_zero);
}

MorrisOrientation::MorrisOrientation(int n) : n_(n) { require_odd(n); }

Outmap MorrisOrientation::evaluate(const Vertex& v) const {
  check_vertex(v);
  return morris_outmap(n_, v);
}

UniformOrientation::UniformOrientation(int n) : n_(n) { check_dimension(n); }

Outmap UniformOrientation::evaluate(const Vertex& v) const {
  check_vertex(v);
  return Outmap(n_, ~v.bits() & full_mask(n_));
}

ReorientedOrientation::ReorientedOrientation(OrientationPtr base, CoordSet flipped)
    : base_(std::move(base)), flipped_(std::move(flipped)) {
  if (flipped_.dimension() != base_->dimension()) throw RangeError("reorientation set dimension mismatch");
}

Outmap ReorientedOrientation::evaluate(const Vertex& v) const {
  const Outmap o = base_->evaluate(v);
  return Outmap(o.dimension(), o.minus_mask() ^ flipped_.mask());
}

RestrictedOrientation::RestrictedOrientation(OrientationPtr base, Subcube face)
    : base_(std::move(base)), face_(std::move(face)), free_coords_(face_.free().members()) {
  if (face_.base().dimension() != base_->dimension()) throw RangeError("subcube dimension mismatch");
}

Vertex RestrictedOrientation::lift(const Vertex& local) const {
  check_vertex(local);
  std::uint64_t bits = face_.base().bits();
  for (std::size_t k = 0; k < free_coords_.size(); ++k)
    if ((local.bits() >> k) & 1u) bits |= std::uint64_t{1} << (free_coords_[k] - 1);
  return Vertex(face_.base().dimension(), bits);
}

Outmap RestrictedOrientation::evaluate(const Vertex& v) const {
  const Outmap parent = base_->evaluate(lift(v));
  std::uint64_t minus = 0;
  for (std::size_t k = 0; k < free_coords_.size(); ++k)
    if ((parent.minus_mask() >> (free_coords_[k] - 1)) & 1u) minus |= std::uint64_t{1} << k;
  return Outmap(static_cast<int>(free_coords_.size()), minus);
}

Outmap AntipodalOrientation::evaluate(const Vertex& v) const {
  check_vertex(v);
  return base_->evaluate(Vertex(v.dimension(), ~v.bits() & full_mask(v.dimension())));
}

Outmap MemoizedOrientation::evaluate(const Vertex& v) const {
  check_vertex(v);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(v.bits()); it != cache_.end()) return it->second;
  }
  Outmap o = base_->evaluate(v);
  std::lock_guard lock(mutex_);
  cache_.emplace(v.bits(), o);
  return o;
}

std::size_t MemoizedOrientation::distinct_evaluations() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

CrossCheckedOrientation::CrossCheckedOrientation(OrientationPtr primary, OrientationPtr reference,
                                                 std::uint64_t period)
    : primary_(std::move(primary)), reference_(std::move(reference)), period_(period ? period : 1) {
  if (primary_->dimension() != reference_->dimension())
    throw RangeError("cross-checked oracles differ in dimension");
}

Outmap CrossCheckedOrientation::evaluate(const Vertex& v) const {
  Outmap o = primary_->evaluate(v);
  if (queries_.fetch_add(1) % period_ == 0) {
    checks_.fetch_add(1);
    const Outmap r = reference_->evaluate(v);
    if (r != o)
      throw MalformedOrientationError("oracle disagreement at " + v.to_string() + ": " +
                                      o.to_string() + " vs reference " + r.to_string());
  }
  return o;
}

OrientationPtr plcp(LcpInstance inst) { return std::make_shared<PlcpOrientation>(std::move(inst)); }
OrientationPtr morris(int n) { return std::make_shared<MorrisOrientation>(n); }
OrientationPtr uniform(int n) { return std::make_shared<UniformOrientation>(n); }

OrientationPtr reorient(OrientationPtr o, const CoordSet& flipped) {
  return std::make_shared<ReorientedOrientation>(std::move(o), flipped);
}

OrientationPtr restrict_to(OrientationPtr o, const Subcube& face) {
  return std::make_shared<RestrictedOrientation>(std::move(o), face);
}

OrientationPtr antipodal_relabel(OrientationPtr o) {
  return std::make_shared<AntipodalOrientation>(std::move(o));
}

// -------------------------------------------------------------- tabulation

UsoTable tabulate(const Orientation& o) {
  const int n = o.dimension();
  if (n > UsoTable::kMaxTableDimension)
    throw CapabilityError("cannot tabulate dimension " + std::to_string(n) + " (cap " +
                          std::to_string(UsoTable::kMaxTableDimension) + ")");
  std::vector<Outmap> rows;
  rows.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) rows.push_back(o.evaluate(Vertex(n, v)));
  return UsoTable(n, std::move(rows));
}

UsoTable tabulate_plcp(const LcpInstance& inst) {
  const int n = inst.n;
  if (n > UsoTable::kMaxTableDimension)
    throw CapabilityError("cannot tabulate dimension " + std::to_string(n));
  std::vector<Outmap> rows(std::size_t{1} << n);
  BasisTableau tab(inst);
  std::uint64_t gray = 0;
  for (std::uint64_t k = 0; k < rows.size(); ++k) {
    if (k > 0) {
      const int coord = std::countr_zero(k) + 1;
      tab.toggle(coord);
      gray ^= std::uint64_t{1} << (coord - 1);
    }
    std::uint64_t minus = 0;
    const RatVector& x = tab.solution();
    for (int i = 0; i < n; ++i) {
      const int s = x[i].sign();
      if (s == 0)
        throw DegeneracyError("degenerate instance: (A_B^{-1} q)_" + std::to_string(i + 1) +
                                  " = 0 for B = " + tab.basis().to_string(),
                              tab.basis().to_string(), i + 1);
      if (s < 0) minus |= std::uint64_t{1} << i;
    }
    rows[gray] = Outmap(n, minus);
  }
  return UsoTable(n, std::move(rows));
}

// -------------------------------------------------------------- table text

namespace {

// Row r of the file is the r-th bit string in lexicographic order, whose
// first character is coordinate 1 (the most significant position).
std::uint64_t reverse_bits(std::uint64_t r, int n) {
  std::uint64_t out = 0;
  for (int k = 0; k < n; ++k)
    if ((r >> k) & 1u) out |= std::uint64_t{1} << (n - 1 - k);
  return out;
}

}  // namespace

std::string table_to_text(const UsoTable& t) {
  std::string out = std::to_string(t.dimension()) + "\n";
  const int n = t.dimension();
  for (std::uint64_t r = 0; r < t.size(); ++r) {
    const Vertex v(n, reverse_bits(r, n));
    out += v.to_string() + " " + t.at(v.bits()).to_string() + "\n";
  }
  return out;
}

UsoTable table_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty table file");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(line, &used);
    if (used != line.size()) throw ParseError("trailing characters after dimension", line_no, static_cast<int>(used) + 1);
  } catch (const std::logic_error&) {
    throw ParseError("first line must be the dimension", line_no, 1);
  }
  if (n < 1 || n > UsoTable::kMaxTableDimension)
    throw ParseError("table dimension out of range 1.." + std::to_string(UsoTable::kMaxTableDimension), line_no, 1);
  std::vector<Outmap> rows(std::size_t{1} << n);
  for (std::uint64_t r = 0; r < rows.size(); ++r) {
    if (!next_line()) throw ParseError("expected " + std::to_string(rows.size()) + " table rows", line_no + 1, 1);
    const auto space = line.find(' ');
    if (space == std::string::npos || static_cast<int>(space) != n || line.size() != 2 * static_cast<std::size_t>(n) + 1)
      throw ParseError("row must be \"<bits> <signs>\" of length " + std::to_string(n), line_no, 1);
    Vertex v;
    Outmap o;
    try {
      v = Vertex::parse(std::string_view(line).substr(0, space));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, e.column());
    }
    try {
      o = Outmap::parse(std::string_view(line).substr(space + 1));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, n + 1 + e.column());
    }
    if (v.bits() != reverse_bits(r, n))
      throw ParseError("rows must list every vertex once in lexicographic order; expected " +
                           Vertex(n, reverse_bits(r, n)).to_string(),
                       line_no, 1);
    rows[v.bits()] = o;
  }
  if (next_line()) throw ParseError("unexpected content after the last row", line_no, 1);
  return UsoTable(n, std::move(rows));
}

UsoTable read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open table file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return table_from_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_table(const UsoTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write table file " + path);
  out << table_to_text(t);
}

}  // namespace usolab
