#pragma once

// Exact integer and rational linear algebra over GMP.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

IntVec make_int_vec(std::initializer_list<long> values);
std::string to_string(std::span<const Integer> v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Integer gcd_of(std::span<const Integer> v);

/// Floor division for a positive divisor.
Integer floor_div(const Integer& num, const Integer& den);
/// Non-negative remainder for a positive modulus.
Integer floor_mod(const Integer& num, const Integer& den);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  IntVec row_vec(std::size_t r) const;
  IntVec col_vec(std::size_t c) const;

  IntMat transpose() const;
  IntVec operator*(std::span<const Integer> x) const;
  IntMat operator*(const IntMat& other) const;

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const IntMat&, const IntMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::string to_string(const IntMat& m);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMat& a);

/// Rank over the rationals.
std::size_t rank(const IntMat& a);

struct HermiteResult {
  IntMat h;  ///< row-style Hermite normal form
  IntMat u;  ///< unimodular transform with h = u * a
};

/// Row-style Hermite normal form: echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMat& a);

bool is_hermite_form(const IntMat& h);

/// Integer solution of a * x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMat& a, std::span<const Integer> b);

/// Inverse of a unimodular square matrix; throws if |det| != 1.
IntMat unimodular_inverse(const IntMat& a);

}  // namespace toric
