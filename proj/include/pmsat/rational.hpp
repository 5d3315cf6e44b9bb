#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pmsat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Formats as "p/q" in lowest terms; integers are written with "/1".
std::string format_rational(const Rational& value);

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }

  Rational& at(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  const Rational& at(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Determinant of a k x k integer matrix (row-major) by fraction-free
/// Bareiss elimination with row pivoting. The input is consumed.
Integer bareiss_determinant(std::vector<Integer> cells, std::size_t k);

}  // namespace pmsat
