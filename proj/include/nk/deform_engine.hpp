#pragma once

// Curvature-operator spectra on m* (x) E and infinitesimal instanton
// deformations by Casimir matching and Frobenius reciprocity.

#include "nk/coset_data.hpp"

#include <map>
#include <optional>
#include <vector>

namespace nk {

struct SpectrumEntry {
  Rational eigenvalue;
  std::int64_t multiplicity;

  friend bool operator==(const SpectrumEntry &, const SpectrumEntry &) = default;
};

// Ascending by eigenvalue.
using CurvatureSpectrum = std::vector<SpectrumEntry>;

// Eigenvalues of eps -> -2 F _| eps on m*_C (x) E with E = gauge_rep(c, gauge).
// Throws ConsistencyError if the trace or total dimension is off.
CurvatureSpectrum curvature_spectrum(const CosetDescriptor &c, Gauge gauge);

// One irreducible component E_alpha of the gauge representation.
struct DeformationTerm {
  Weight e_alpha;
  std::int64_t n_alpha = 0;
  Rational casimir;                      // Cas_h(E_alpha)
  std::vector<Weight> candidates;        // G-irreducibles with Cas_g = Cas_h(E_alpha)
  RepDecomposition e_tensor_mstar;       // E_alpha (x) m*_C over H
  std::map<Weight, std::int64_t> counts; // n(alpha, gamma) summed over beta, nonzero only
};

struct DeformationSpace {
  CosetName coset;
  Gauge gauge;
  std::vector<DeformationTerm> terms;
  RepDecomposition complexified;
  RepDecomposition halved;
  std::int64_t real_dimension = 0;
};

// Runs the algorithm on the given components of E (all of gauge_rep when
// omitted). Throws EvennessError if a complexified multiplicity is odd.
DeformationSpace deformation_space(const CosetDescriptor &c, Gauge gauge,
                                   const std::optional<RepDecomposition> &components = {});

// Deformations coming from the trivial (zero highest weight) components of the
// adjoint of H; true iff there are none.
bool abelian_rigidity_check(const CosetDescriptor &c);

} // namespace nk
