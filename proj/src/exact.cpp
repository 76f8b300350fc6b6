#include "usolab/exact.hpp"

#include <utility>

#include "usolab/errors.hpp"

namespace usolab {

Rational::Rational(long num, long den) {
  if (den == 0) throw RangeError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  mpz_class n(num_s, 10), d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw RangeError("division by zero");
  value_ /= o.value_;
  return *this;
}

// --------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw RangeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void RatMatrix::set_column(std::size_t j, const RatVector& values) {
  if (values.size() != rows_) throw RangeError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

RatMatrix RatMatrix::select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
  RatMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
  return out;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix out(*this);
  for (auto& x : out.data_) x = -x;
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw RangeError("matrix product dimension mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  if (a.cols() != x.size()) throw RangeError("matrix-vector dimension mismatch");
  RatVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) y[i] += a(i, j) * x[j];
  return y;
}

// ------------------------------------------------------------- elimination

namespace {

// Integer image of [A | B]: each row scaled by the lcm of its denominators.
struct IntegerSystem {
  std::size_t n = 0;
  std::size_t width = 0;  // n + number of right-hand sides
  std::vector<mpz_class> a;
  mpz_class& at(std::size_t i, std::size_t j) { return a[i * width + j]; }
};

IntegerSystem integerize(const RatMatrix& m, const std::vector<const RatVector*>& rhs,
                         mpz_class* row_scale_product) {
  IntegerSystem s;
  s.n = m.rows();
  s.width = s.n + rhs.size();
  s.a.resize(s.n * s.width);
  if (row_scale_product) *row_scale_product = 1;
  for (std::size_t i = 0; i < s.n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < s.n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get().get_den_mpz_t());
    for (const RatVector* b : rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*b)[i].get().get_den_mpz_t());
    for (std::size_t j = 0; j < s.n; ++j) {
      const mpq_class& q = m(i, j).get();
      s.at(i, j) = q.get_num() * (l / q.get_den());
    }
    for (std::size_t r = 0; r < rhs.size(); ++r) {
      const mpq_class& q = (*rhs[r])[i].get();
      s.at(i, s.n + r) = q.get_num() * (l / q.get_den());
    }
    if (row_scale_product) *row_scale_product *= l;
  }
  return s;
}

// Bareiss forward elimination with row pivoting. Returns the sign of the row
// permutation, or 0 if singular (then *bad_column is set).
int bareiss(IntegerSystem& s, int* bad_column) {
  int perm_sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < s.n; ++k) {
    std::size_t p = k;
    while (p < s.n && s.at(p, k) == 0) ++p;
    if (p == s.n) {
      if (bad_column) *bad_column = static_cast<int>(k);
      return 0;
    }
    if (p != k) {
      for (std::size_t j = 0; j < s.width; ++j) std::swap(s.at(p, j), s.at(k, j));
      perm_sign = -perm_sign;
    }
    for (std::size_t i = k + 1; i < s.n; ++i) {
      for (std::size_t j = k + 1; j < s.width; ++j) {
        mpz_class t = s.at(k, k) * s.at(i, j) - s.at(i, k) * s.at(k, j);
        mpz_divexact(s.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      s.at(i, k) = 0;
    }
    prev = s.at(k, k);
  }
  return perm_sign;
}

void require_square(const RatMatrix& a) {
  if (!a.square() || a.rows() == 0) throw RangeError("matrix must be square and nonempty");
}

}  // namespace

RatVector rat_solve(const RatMatrix& a, const RatVector& b) {
  require_square(a);
  if (b.size() != a.rows()) throw RangeError("right-hand side length mismatch");
  IntegerSystem s = integerize(a, {&b}, nullptr);
  int bad = -1;
  if (bareiss(s, &bad) == 0)
    throw SingularMatrixError("singular matrix: no pivot in column " + std::to_string(bad), bad);
  const std::size_t n = s.n;
  std::vector<mpq_class> x(n);
  for (std::size_t k = n; k-- > 0;) {
    mpq_class acc = s.at(k, n);
    for (std::size_t j = k + 1; j < n; ++j) acc -= s.at(k, j) * x[j];
    x[k] = acc / s.at(k, k);
    x[k].canonicalize();
  }
  RatVector out;
  out.reserve(n);
  for (auto& v : x) out.emplace_back(std::move(v));
  return out;
}

Rational rat_det(const RatMatrix& a) {
  require_square(a);
  mpz_class scale;
  IntegerSystem s = integerize(a, {}, &scale);
  const int sign = bareiss(s, nullptr);
  if (sign == 0) return Rational(0);
  mpq_class d(s.at(s.n - 1, s.n - 1) * sign, scale);
  return Rational(std::move(d));
}

RatMatrix rat_inverse(const RatMatrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  RatMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n);
    e[j] = 1;
    inv.set_column(j, rat_solve(a, e));
  }
  return inv;
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::string to_string(const RatMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

}  // namespace usolab
