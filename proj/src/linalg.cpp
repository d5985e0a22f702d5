#include "spearlab/linalg.hpp"

#include <utility>

#include "spearlab/error.hpp"

namespace spearlab {

namespace {
void check_same(std::size_t a, std::size_t b, const char* what) {
  require(a == b, ErrorCode::DimensionMismatch,
          std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    check_same(rows[r].size(), m.cols_, "ragged matrix row");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<RatVector> RatMatrix::row_list() const {
  std::vector<RatVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  check_same(a.size(), b.size(), "dot product");
  mpq_class acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i].value() * b[i].value();
  }
  return Rational(std::move(acc));
}

RatVector add(const RatVector& a, const RatVector& b) {
  check_same(a.size(), b.size(), "vector add");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  check_same(a.size(), b.size(), "vector sub");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector scale(const RatVector& a, const Rational& s) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

RatVector negate(const RatVector& a) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool is_zero(const RatVector& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

RatVector zeros(std::size_t n) { return RatVector(n); }

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v.at(i) = 1;
  return v;
}

RatVector multiply(const RatMatrix& m, const RatVector& x) {
  check_same(m.cols(), x.size(), "matrix-vector product");
  RatVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.row(r), x);
  return out;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  check_same(a.cols(), b.rows(), "matrix product");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

RatMatrix add(const RatMatrix& a, const RatMatrix& b) {
  check_same(a.rows(), b.rows(), "matrix add (rows)");
  check_same(a.cols(), b.cols(), "matrix add (cols)");
  RatMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

RatMatrix scale(const RatMatrix& a, const Rational& s) {
  RatMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) * s;
  return out;
}

RatMatrix outer(const RatVector& col, const RatVector& row) {
  RatMatrix out(col.size(), row.size());
  for (std::size_t r = 0; r < col.size(); ++r)
    for (std::size_t c = 0; c < row.size(); ++c) out(r, c) = col[r] * row[c];
  return out;
}

std::size_t rank(const std::vector<RatVector>& rows, std::size_t width) {
  std::vector<RatVector> m = rows;
  for (const auto& r : m) check_same(r.size(), width, "rank input");
  std::size_t rk = 0;
  for (std::size_t c = 0; c < width && rk < m.size(); ++c) {
    std::size_t piv = rk;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rk], m[piv]);
    for (std::size_t r = rk + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      Rational f = m[r][c] / m[rk][c];
      for (std::size_t k = c; k < width; ++k) m[r][k] -= f * m[rk][k];
    }
    ++rk;
  }
  return rk;
}

RatVector primitive(const RatVector& a) {
  mpz_class l = 1;
  for (const auto& x : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> nums(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    nums[i] = a[i].value().get_num() * (l / a[i].value().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
  }
  if (g == 0) return a;
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = Rational(mpq_class(nums[i] / g));
  return out;
}

bool lex_positive(const RatVector& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return x.sign() > 0;
  return false;
}

std::string format(const RatVector& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += a[i].to_string();
  }
  return s + ")";
}

std::vector<double> to_double(const RatVector& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].to_double();
  return out;
}

}  // namespace spearlab
