#pragma once

// Fixtures for the four homogeneous nearly Kaehler six-manifolds G/H.

#include "nk/forms_casimir.hpp"
#include "nk/tensor_branch.hpp"

#include <string>
#include <vector>

namespace nk {

enum class CosetName { G2Su3, Su2CubedSu2, Sp2Sp1U1, Su3U1U1 };

const std::vector<CosetName> &all_cosets();
// Canonical display name, e.g. "Sp(2)/Sp(1)xU(1)".
std::string to_string(CosetName name);
// Short alias: g2su3, su2cubed, sp2, su3t2.
std::string alias(CosetName name);
// Accepts aliases and canonical names. Throws PreconditionError otherwise.
CosetName parse_coset_name(const std::string &text);

enum class Gauge { H, SU3 };
std::string to_string(Gauge gauge);
Gauge parse_gauge(const std::string &text);

struct CosetDescriptor {
  CosetName name;
  RootData g_data;
  RootData h_data;
  RestrictionMap restriction;
  BilinearForm b_g;
  BilinearForm b_h;
  // H-decomposition of the complexified cotangent space m*.
  RepDecomposition mstar;
  // Its (1,0)-part, a 3-dimensional H-representation.
  RepDecomposition mstar_holomorphic;
};

// Checks every descriptor invariant; throws FixtureError naming the failure.
void validate(const CosetDescriptor &c);

// Built-in fixtures, validated on first use.
const CosetDescriptor &coset(CosetName name);

// Builds a descriptor from the raw fixture fields and validates it.
CosetDescriptor make_coset(CosetName name, PairTag g_tag, PairTag h_tag, RationalMatrix restriction,
                           RepDecomposition mstar_holomorphic);

// Decomposition of the conjugate representation.
RepDecomposition conjugate(const RepDecomposition &d);

// Complexified adjoint of H (gauge H), or su(3) = V (x) V* minus a trivial
// summand with V the (1,0)-part of m* (gauge SU3).
RepDecomposition gauge_rep(const CosetDescriptor &c, Gauge gauge);

CasimirContext g_context(const CosetDescriptor &c);
CasimirContext h_context(const CosetDescriptor &c);

} // namespace nk
