#include "nk/rational.hpp"

#include "nk/errors.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace nk {

std::string to_string(const Rational &q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1)
    return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string &text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw PreconditionError("not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

bool is_integer(const Rational &q) {
  Rational c = q;
  c.canonicalize();
  return c.get_den() == 1;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw PreconditionError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational> &entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(i, i) = entries[i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square())
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i))
        return false;
  return true;
}

bool RationalMatrix::is_skew_symmetric() const {
  if (!is_square())
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i))
        return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational &q) { return q == 0; });
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> RationalMatrix::col(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c[i] = (*this)(i, j);
  return c;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational> &v) const {
  if (v.size() != cols_)
    throw PreconditionError("matrix-vector size mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0)
        out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalMatrix &RationalMatrix::operator+=(const RationalMatrix &rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw PreconditionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] += rhs.data_[k];
  return *this;
}

RationalMatrix &RationalMatrix::operator-=(const RationalMatrix &rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw PreconditionError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] -= rhs.data_[k];
  return *this;
}

RationalMatrix &RationalMatrix::operator*=(const Rational &s) {
  for (auto &x : data_)
    x *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.cols_ != b.rows_)
    throw PreconditionError("matrix product shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational &aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const RationalMatrix &a, const RationalMatrix &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream &operator<<(std::ostream &os, const RationalMatrix &m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << to_string(m(i, j));
    os << ']';
  }
  return os << ']';
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0)
      ++p;
    if (p == m.rows())
      continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t rank(const RationalMatrix &m) {
  RationalMatrix w = m;
  return rref(w).size();
}

Rational determinant(const RationalMatrix &m) {
  if (!m.is_square())
    throw PreconditionError("determinant of non-square matrix");
  RationalMatrix w = m;
  Rational det = 1;
  const std::size_t n = w.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w(p, c) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(w(p, j), w(c, j));
      det = -det;
    }
    det *= w(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (w(i, c) == 0)
        continue;
      const Rational f = w(i, c) / w(c, c);
      for (std::size_t j = c; j < n; ++j)
        w(i, j) -= f * w(c, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix &m) {
  if (!m.is_square())
    throw PreconditionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw PreconditionError("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

RationalMatrix kernel_basis(const RationalMatrix &m) {
  RationalMatrix w = m;
  const auto pivots = rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c])
      free_cols.push_back(c);
  RationalMatrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], k) = -w(r, f);
  }
  return basis;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix &m) {
  if (!m.is_square())
    throw PreconditionError("minors of non-square matrix");
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RationalMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        sub(i, j) = m(i, j);
    minors.push_back(determinant(sub));
  }
  return minors;
}

int Polynomial::degree() const {
  for (std::size_t k = coeffs.size(); k-- > 0;)
    if (coeffs[k] != 0)
      return static_cast<int>(k);
  return -1;
}

Rational Polynomial::operator()(const Rational &x) const {
  Rational acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;)
    acc = acc * x + coeffs[k];
  return acc;
}

Polynomial characteristic_polynomial(const RationalMatrix &m) {
  if (!m.is_square())
    throw PreconditionError("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  Polynomial p;
  p.coeffs.assign(n + 1, Rational(0));
  p.coeffs[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  RationalMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i)
      next(i, i) += p.coeffs[n - k + 1];
    mk = std::move(next);
    p.coeffs[n - k] = -(m * mk).trace() / static_cast<long>(k);
  }
  return p;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0)
    n = -n;
  static const Integer limit("1000000000000");
  if (n > limit)
    throw UnexpectedSpectrum("coefficient too large for rational-root search: " + n.get_str());
  std::set<Integer> divs;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.insert(d);
      divs.insert(n / d);
    }
  return {divs.begin(), divs.end()};
}

// Synthetic division by (x - r); caller guarantees p(r) == 0.
Polynomial deflate(const Polynomial &p, const Rational &r) {
  const int d = p.degree();
  Polynomial q;
  q.coeffs.assign(static_cast<std::size_t>(d), Rational(0));
  Rational carry = 0;
  for (int k = d; k >= 1; --k) {
    carry = carry * r + p.coeffs[static_cast<std::size_t>(k)];
    q.coeffs[static_cast<std::size_t>(k - 1)] = carry;
  }
  return q;
}

} // namespace

RationalFactorization factor_rational_roots(const Polynomial &p) {
  RationalFactorization out;
  Polynomial rest = p;
  rest.coeffs.resize(static_cast<std::size_t>(std::max(rest.degree(), 0)) + 1);

  auto record = [&out](const Rational &r) {
    for (auto &[root, mult] : out.roots)
      if (root == r) {
        ++mult;
        return;
      }
    out.roots.emplace_back(r, 1);
  };

  while (rest.degree() > 0 && rest.coeffs[0] == 0) {
    rest.coeffs.erase(rest.coeffs.begin());
    record(0);
  }

  bool progress = true;
  while (rest.degree() > 0 && progress) {
    progress = false;
    // Scale to a primitive integer polynomial.
    Integer lcm_den = 1;
    for (const auto &c : rest.coeffs)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    const Integer lead = Rational(rest.coeffs.back() * lcm_den).get_num();
    const Integer constant = Rational(rest.coeffs.front() * lcm_den).get_num();
    for (const auto &num : positive_divisors(constant)) {
      for (const auto &den : positive_divisors(lead)) {
        for (int sign : {1, -1}) {
          Rational cand(num * sign, den);
          cand.canonicalize();
          if (rest(cand) == 0) {
            rest = deflate(rest, cand);
            record(cand);
            progress = true;
            break;
          }
        }
        if (progress)
          break;
      }
      if (progress)
        break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.residual = rest;
  return out;
}

} // namespace nk
