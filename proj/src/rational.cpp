#include "pmsat/rational.hpp"

#include <utility>

#include "pmsat/errors.hpp"

namespace pmsat {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw ParseError("malformed integer '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Rational value;
  if (slash == std::string_view::npos) {
    value = Rational(parse_integer(text));
  } else {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
    value.canonicalize();
  }
  return value;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Integer bareiss_determinant(std::vector<Integer> cells, std::size_t k) {
  if (k == 0) return Integer(1);
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return cells[r * k + c]; };

  Integer previous_pivot = 1;
  bool negate = false;
  Integer scratch;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (at(p, p) == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < k && at(swap_row, p) == 0) ++swap_row;
      if (swap_row == k) return Integer(0);
      for (std::size_t c = 0; c < k; ++c) std::swap(at(p, c), at(swap_row, c));
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        // a_ij <- (a_ij * a_pp - a_ip * a_pj) / previous pivot, exact division.
        scratch = at(i, j) * at(p, p);
        scratch -= at(i, p) * at(p, j);
        mpz_divexact(at(i, j).get_mpz_t(), scratch.get_mpz_t(), previous_pivot.get_mpz_t());
      }
      at(i, p) = 0;
    }
    previous_pivot = at(p, p);
  }
  Integer det = at(k - 1, k - 1);
  return negate ? Integer(-det) : det;
}

}  // namespace pmsat
