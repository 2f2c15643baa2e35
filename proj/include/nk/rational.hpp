#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace nk {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "p/q" (or "p" when q == 1) rendering.
std::string to_string(const Rational &q);
Rational parse_rational(const std::string &text);
bool is_integer(const Rational &q);

// Dense exact matrix over Q. Row-major storage.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational> &entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  Rational trace() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  bool is_zero() const;

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> col(std::size_t j) const;
  std::vector<Rational> apply(const std::vector<Rational> &v) const;

  RationalMatrix &operator+=(const RationalMatrix &rhs);
  RationalMatrix &operator-=(const RationalMatrix &rhs);
  RationalMatrix &operator*=(const Rational &s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix &b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix &b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational &s) { return a *= s; }
  friend RationalMatrix operator*(const Rational &s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
  friend bool operator==(const RationalMatrix &a, const RationalMatrix &b);
  friend bool operator!=(const RationalMatrix &a, const RationalMatrix &b) { return !(a == b); }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream &operator<<(std::ostream &os, const RationalMatrix &m);

// Gauss-Jordan over Q.
std::size_t rank(const RationalMatrix &m);
Rational determinant(const RationalMatrix &m);
// Throws PreconditionError for singular or non-square input.
RationalMatrix inverse(const RationalMatrix &m);
// Columns of the returned matrix span the right kernel; rows() == m.cols().
RationalMatrix kernel_basis(const RationalMatrix &m);
std::vector<Rational> leading_principal_minors(const RationalMatrix &m);

// Dense polynomial, coefficients stored lowest degree first.
struct Polynomial {
  std::vector<Rational> coeffs;

  int degree() const;
  Rational operator()(const Rational &x) const;
};

// det(x I - m), monic, via the Faddeev-LeVerrier recurrence.
Polynomial characteristic_polynomial(const RationalMatrix &m);

// Rational roots with multiplicity, ascending, plus the remaining factor
// that has no rational roots (degree 0 when the polynomial splits over Q).
struct RationalFactorization {
  std::vector<std::pair<Rational, int>> roots;
  Polynomial residual;
};
RationalFactorization factor_rational_roots(const Polynomial &p);

} // namespace nk
