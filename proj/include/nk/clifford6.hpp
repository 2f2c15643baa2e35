#pragma once

// Exact Cl(0,6) with its 8-dimensional real spinor module, the forms P, Q
// determined by a unit spinor, and checks of the pointwise identities they
// satisfy.

#include "nk/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nk {

inline constexpr int kDim = 6;
inline constexpr int kBlades = 64;

// Element of the exterior algebra of R^6; coefficient i belongs to the blade
// e_I whose index set is the bit pattern of i (bit a-1 for e_a), ascending order.
class Multivector {
public:
  Multivector() = default;
  static Multivector scalar(const Rational &s);
  static Multivector basis(std::uint8_t blade);
  // e_a, a in 1..6
  static Multivector e(int a);
  static Multivector volume();

  const Rational &operator[](std::uint8_t blade) const { return c_[blade]; }
  Rational &operator[](std::uint8_t blade) { return c_[blade]; }

  Multivector grade(int k) const;
  bool is_zero() const;
  // Sum of squared coefficients: the metric induced on forms.
  Rational norm2() const;

  Multivector &operator+=(const Multivector &o);
  Multivector &operator-=(const Multivector &o);
  Multivector &operator*=(const Rational &s);
  friend Multivector operator+(Multivector a, const Multivector &b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector &b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= Rational(-1); }
  friend Multivector operator*(Multivector a, const Rational &s) { return a *= s; }
  friend Multivector operator*(const Rational &s, Multivector a) { return a *= s; }
  friend bool operator==(const Multivector &a, const Multivector &b) { return a.c_ == b.c_; }

private:
  std::array<Rational, kBlades> c_{};
};

int grade_of(std::uint8_t blade);
std::string blade_name(std::uint8_t blade); // "e135", "1"
std::string to_string(const Multivector &m);

Multivector wedge(const Multivector &a, const Multivector &b);
// Clifford product with e_a e_a = -1.
Multivector clifford(const Multivector &a, const Multivector &b);
Multivector commutator(const Multivector &a, const Multivector &b);
Multivector anticommutator(const Multivector &a, const Multivector &b);
// e_{i1...ik} _| C = e_ik _| ( ... (e_i1 _| C)), so e_12 _| e_12 = 1.
Multivector contract(const Multivector &a, const Multivector &b);
// alpha ^ *beta = <alpha, beta> e_123456.
Multivector hodge(const Multivector &a);

struct CliffordRep {
  std::array<RationalMatrix, kDim> gamma;
  std::array<RationalMatrix, kBlades> blade_matrix;

  RationalMatrix matrix(const Multivector &m) const;
  // Inverse of matrix() through the trace pairing Tr(m_I^T M) / 8.
  Multivector multivector(const RationalMatrix &m) const;
};

// Gamma matrices as signed permutations built from 2x2 blocks; every
// representation invariant is checked and IdentityViolation thrown on failure.
const CliffordRep &build_rep();

using Spinor = std::vector<Rational>;
Spinor basis_spinor(std::size_t i);
Rational spinor_dot(const Spinor &a, const Spinor &b);
Spinor apply(const RationalMatrix &m, const Spinor &s);

struct PQ {
  Multivector p; // grade 3
  Multivector q; // grade 4
};

// 8 psi psi^T = 1 + P - Q. Throws PreconditionError for a non-unit spinor and
// IdentityViolation if grades other than 0, 3, 4 appear.
PQ extract_pq(const CliffordRep &rep, const Spinor &psi);

// Eigenvalues of P and Q on span(psi), {u psi}, span(Vol psi), in that order.
struct SpinorSpectra {
  std::array<Rational, 3> p;
  std::array<Rational, 3> q;
};
SpinorSpectra spinor_decomposition_spectra(const CliffordRep &rep, const Spinor &psi);

// J u psi = Vol u psi, as a 6x6 matrix acting on coordinate vectors.
RationalMatrix complex_structure(const CliffordRep &rep, const Spinor &psi);
// The two-form omega with (1/8) Tr(omega u v) = -g(u, J v).
Multivector kaehler_form(const CliffordRep &rep, const Spinor &psi);

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_identity_suite(const CliffordRep &rep, const Spinor &psi);
// As run_identity_suite, but throws IdentityViolation naming the first failure.
std::vector<CheckResult> verify_identity_suite(const CliffordRep &rep, const Spinor &psi);

// Two-forms in the basis e_ab, a < b, lexicographic.
const std::vector<std::uint8_t> &two_form_blades();
// Matrix of beta -> beta _| Q on the 15-dimensional space of two-forms.
RationalMatrix q_contraction_operator(const Multivector &q);

struct Eigenspace {
  Rational eigenvalue;
  std::size_t dimension;
};
struct QContractionSpectrum {
  std::vector<Eigenspace> spaces; // ascending eigenvalue
  RationalMatrix operator_matrix;
  // Projector onto the (-1)-eigenspace along the other eigenspaces.
  RationalMatrix instanton_projector;
  // Eigenvalue of omega = *Q.
  Rational omega_eigenvalue;
};
// Throws UnexpectedSpectrum if the spectrum is not rational or the operator
// is not diagonalisable.
QContractionSpectrum q_contraction_spectrum(const CliffordRep &rep, const Spinor &psi);

Multivector two_form_from_coords(const std::vector<Rational> &coords);
std::vector<Rational> two_form_coords(const Multivector &m);

} // namespace nk
