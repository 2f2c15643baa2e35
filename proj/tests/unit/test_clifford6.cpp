#include "doctest.h"

#include "nk/clifford6.hpp"
#include "nk/errors.hpp"

#include <random>

using namespace nk;

namespace {

Multivector random_multivector(std::mt19937 &rng, int grade = -1) {
  std::uniform_int_distribution<int> c(-3, 3);
  Multivector m;
  for (int i = 0; i < kBlades; ++i)
    if (grade < 0 || grade_of(static_cast<std::uint8_t>(i)) == grade)
      m[static_cast<std::uint8_t>(i)] = c(rng);
  return m;
}

Spinor second_spinor() {
  Spinor s(8, Rational(0));
  s[0] = Rational(3, 5);
  s[3] = Rational(4, 5);
  return s;
}

RationalMatrix column(const RationalMatrix &proj, std::size_t col) {
  RationalMatrix v(proj.rows(), 1);
  for (std::size_t r = 0; r < proj.rows(); ++r)
    v(r, 0) = proj(r, col);
  return v;
}

} // namespace

TEST_CASE("representation invariants") {
  const auto &rep = build_rep();
  const auto id = RationalMatrix::identity(8);
  CHECK(rep.gamma[0] * rep.gamma[0] == id * Rational(-1));
  CHECK(rep.gamma[0] * rep.gamma[1] == rep.gamma[1] * rep.gamma[0] * Rational(-1));
  CHECK(rep.matrix(Multivector::basis(0b000111)).is_symmetric());
  CHECK(rep.matrix(Multivector::basis(0b000011)).is_skew_symmetric());
  const auto vol = rep.matrix(Multivector::volume());
  CHECK(vol * vol == id * Rational(-1));
}

TEST_CASE("matrix model is an algebra homomorphism") {
  const auto &rep = build_rep();
  std::mt19937 rng(7);
  for (int s = 0; s < 5; ++s) {
    const auto a = random_multivector(rng);
    const auto b = random_multivector(rng);
    CHECK(rep.matrix(clifford(a, b)) == rep.matrix(a) * rep.matrix(b));
    CHECK(rep.multivector(rep.matrix(a)) == a);
  }
}

TEST_CASE("blade products") {
  const auto e1 = Multivector::e(1), e2 = Multivector::e(2);
  CHECK(clifford(e1, e1) == Multivector::scalar(-1));
  CHECK(clifford(e1, e2) == Multivector::basis(0b11));
  CHECK(clifford(e2, e1) == -Multivector::basis(0b11));
  CHECK(wedge(e1, e1).is_zero());
  CHECK(contract(Multivector::basis(0b11), Multivector::basis(0b11)) == Multivector::scalar(1));
  CHECK(to_string(e1 - Multivector::basis(0b110) * Rational(1, 2)) == "e1 - 1/2*e23");
}

TEST_CASE("wedge of pure grades has pure grade") {
  std::mt19937 rng(11);
  for (int k = 0; k <= 6; ++k)
    for (int l = 0; k + l <= 6; ++l) {
      const auto w = wedge(random_multivector(rng, k), random_multivector(rng, l));
      CHECK(w.grade(k + l) == w);
    }
}

TEST_CASE("contraction obeys the graded Leibniz rule") {
  std::mt19937 rng(13);
  for (int a = 1; a <= kDim; ++a)
    for (int k = 0; k <= 3; ++k) {
      const auto u = Multivector::e(a);
      const auto alpha = random_multivector(rng, k);
      const auto beta = random_multivector(rng, 2);
      const auto lhs = contract(u, wedge(alpha, beta));
      const auto rhs = wedge(contract(u, alpha), beta) +
                       wedge(alpha, contract(u, beta)) * Rational(k % 2 ? -1 : 1);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("hodge star") {
  CHECK(hodge(Multivector::scalar(1)) == Multivector::volume());
  std::mt19937 rng(17);
  for (int k = 0; k <= 6; ++k) {
    const auto a = random_multivector(rng, k);
    const auto b = random_multivector(rng, k);
    Rational inner = 0;
    for (int i = 0; i < kBlades; ++i)
      inner += a[static_cast<std::uint8_t>(i)] * b[static_cast<std::uint8_t>(i)];
    CHECK(wedge(a, hodge(b)) == Multivector::volume() * inner);
    CHECK(hodge(hodge(a)) == a * Rational((k * (6 - k)) % 2 ? -1 : 1));
  }
}

TEST_CASE("P and Q from the first basis spinor") {
  const auto &rep = build_rep();
  const auto pq = extract_pq(rep, basis_spinor(0));
  CHECK(pq.p.grade(3) == pq.p);
  CHECK(pq.q.grade(4) == pq.q);
  CHECK(pq.p.norm2() == 4);
  CHECK(pq.q.norm2() == 3);
  CHECK(rep.matrix(Multivector::scalar(1) + pq.p - pq.q) ==
        [&] {
          RationalMatrix m(8, 8);
          m(0, 0) = 8;
          return m;
        }());
  CHECK_THROWS_AS(extract_pq(rep, Spinor(8, Rational(1))), PreconditionError);
}

TEST_CASE("spinor decomposition table") {
  const auto &rep = build_rep();
  for (const auto &psi : {basis_spinor(0), second_spinor(), basis_spinor(5)}) {
    const auto t = spinor_decomposition_spectra(rep, psi);
    CHECK(t.p[0] == 4);
    CHECK(t.p[1] == 0);
    CHECK(t.p[2] == -4);
    CHECK(t.q[0] == -3);
    CHECK(t.q[1] == 1);
    CHECK(t.q[2] == -3);
  }
}

TEST_CASE("complex structure and omega") {
  const auto &rep = build_rep();
  const auto psi = basis_spinor(0);
  const auto j = complex_structure(rep, psi);
  CHECK(j * j == RationalMatrix::identity(6) * Rational(-1));
  CHECK(j.transpose() * j == RationalMatrix::identity(6));
  const auto omega = kaehler_form(rep, psi);
  CHECK(omega == hodge(extract_pq(rep, psi).q));
  for (int c = 0; c < kDim; ++c)
    for (int d = c + 1; d < kDim; ++d)
      CHECK(omega[static_cast<std::uint8_t>((1u << c) | (1u << d))] == j(c, d));
}

TEST_CASE("identity suite passes") {
  const auto &rep = build_rep();
  for (const auto &psi : {basis_spinor(0), second_spinor()}) {
    const auto results = verify_identity_suite(rep, psi);
    REQUIRE(results.size() == 8);
    const char *ids[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    for (std::size_t i = 0; i < results.size(); ++i) {
      CHECK(results[i].id == ids[i]);
      CHECK(results[i].passed);
    }
  }
}

TEST_CASE("individual identity examples") {
  const auto &rep = build_rep();
  const auto pq = extract_pq(rep, basis_spinor(0));
  const auto mp = rep.matrix(pq.p);
  const auto x = rep.gamma[0];
  const auto ax = x * mp + mp * x;
  Rational tr = 0;
  const auto sq = ax * ax;
  for (std::size_t i = 0; i < 8; ++i)
    tr += sq(i, i);
  CHECK(tr * Rational(-1, 32) == 2);

  Multivector sum;
  for (int a = 1; a <= kDim; ++a)
    sum += clifford(clifford(Multivector::e(a), Multivector::e(3)), Multivector::e(a));
  CHECK(sum == Multivector::e(3) * Rational(4));

  const auto sq_q = clifford(hodge(pq.q), hodge(pq.q));
  CHECK(rep.matrix(sq_q) == rep.matrix(Multivector::scalar(-3) + pq.q * Rational(2)));
}

TEST_CASE("contraction with Q on two-forms") {
  const auto &rep = build_rep();
  const auto psi = basis_spinor(0);
  const auto spec = q_contraction_spectrum(rep, psi);
  std::size_t total = 0, minus_one = 0;
  for (const auto &s : spec.spaces) {
    total += s.dimension;
    if (s.eigenvalue == -1)
      minus_one = s.dimension;
  }
  CHECK(total == 15);
  CHECK(minus_one == 8);
  CHECK(spec.omega_eigenvalue == 2);

  const auto &p = spec.instanton_projector;
  CHECK(p * p == p);
  CHECK(rank(p) == 8);
  CHECK(spec.operator_matrix * p == p * Rational(-1));

  const auto j = complex_structure(rep, psi);
  const auto omega = kaehler_form(rep, psi);
  std::vector<Multivector> basis;
  for (std::size_t col = 0; col < 15; ++col) {
    const auto v = column(p, col);
    std::vector<Rational> coords;
    for (std::size_t r = 0; r < 15; ++r)
      coords.push_back(v(r, 0));
    basis.push_back(two_form_from_coords(coords));
  }
  for (const auto &beta : basis) {
    CHECK(contract(beta, omega).is_zero());
    RationalMatrix b(6, 6);
    for (int c = 0; c < kDim; ++c)
      for (int d = c + 1; d < kDim; ++d) {
        b(c, d) = beta[static_cast<std::uint8_t>((1u << c) | (1u << d))];
        b(d, c) = -b(c, d);
      }
    CHECK(j.transpose() * b * j == b);
    CHECK(rep.matrix(beta).apply(psi) == Spinor(8, Rational(0)));
  }
  for (const auto &x : basis)
    for (const auto &y : basis) {
      const auto c = commutator(x, y);
      REQUIRE(c.grade(2) == c);
      const auto coords = two_form_coords(c);
      CHECK(p.apply(coords) == coords);
    }
}

TEST_CASE("invariants agree for a second unit spinor") {
  const auto &rep = build_rep();
  const auto a = q_contraction_spectrum(rep, basis_spinor(0));
  const auto b = q_contraction_spectrum(rep, second_spinor());
  REQUIRE(a.spaces.size() == b.spaces.size());
  for (std::size_t i = 0; i < a.spaces.size(); ++i) {
    CHECK(a.spaces[i].eigenvalue == b.spaces[i].eigenvalue);
    CHECK(a.spaces[i].dimension == b.spaces[i].dimension);
  }
  CHECK(extract_pq(rep, second_spinor()).p.norm2() == 4);
  CHECK(kaehler_form(rep, second_spinor()) == hodge(extract_pq(rep, second_spinor()).q));
}
