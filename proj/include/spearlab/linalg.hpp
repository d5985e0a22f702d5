#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spearlab/rational.hpp"

namespace spearlab {

using RatVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from a list of equal-length rows. Throws DimensionMismatch on ragged input.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  RatVector row_vector(std::size_t r) const;
  RatVector column(std::size_t c) const;
  std::vector<RatVector> row_list() const;

  RatMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const RatVector& a, const Rational& s);
RatVector negate(const RatVector& a);
bool is_zero(const RatVector& a);
RatVector zeros(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);

RatVector multiply(const RatMatrix& m, const RatVector& x);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix add(const RatMatrix& a, const RatMatrix& b);
RatMatrix scale(const RatMatrix& a, const Rational& s);
RatMatrix outer(const RatVector& col, const RatVector& row);

/// Exact rank by Gaussian elimination.
std::size_t rank(const std::vector<RatVector>& rows, std::size_t width);

/// Rescales to the primitive integer vector on the same ray (positive multiple).
RatVector primitive(const RatVector& a);

/// True when the first nonzero entry is positive.
bool lex_positive(const RatVector& a);

std::string format(const RatVector& a);
std::vector<double> to_double(const RatVector& a);

}  // namespace spearlab
