#pragma once

// The invariant form B for each (ambient, subalgebra) pair, the Freudenthal
// Casimir eigenvalue and enumeration of irreducibles by Casimir value.

#include "nk/lie_core.hpp"
#include "nk/tensor_branch.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nk {

// B is normalised by a trace over the ambient algebra, so the same abstract
// algebra gets different forms depending on where it sits.
enum class PairTag {
  Su3InG2,
  G2,
  Su2DiagonalInSu2Cubed,
  Su2Cubed,
  Sp1U1InSp2,
  Sp2,
  U1U1InSu3,
  Su3Ambient,
};

const std::vector<PairTag> &all_pair_tags();
std::string to_string(PairTag tag);
// Throws PreconditionError for an unknown tag.
PairTag parse_pair_tag(const std::string &text);

// Subalgebra of an ambient algebra together with the weight restriction.
// For tags naming the ambient algebra itself the restriction is the identity.
struct PairEmbedding {
  PairTag tag;
  RootData ambient;
  RootData sub;
  RestrictionMap restriction;
};

const PairEmbedding &pair_embedding(PairTag tag);

struct BilinearForm {
  PairTag tag;
  RootData algebra;
  // B on fundamental weights (and charges), block per factor.
  RationalMatrix gram;
  // B on the basis H_i dual to the fundamental weights; the inverse of gram.
  RationalMatrix dual_gram;
};

// Gram matrices as stored: the dual-basis Gram is the primary data and the
// form on weights is its inverse. Checks symmetry and negative definiteness.
BilinearForm bilinear_form(PairTag tag);

// Recomputes B(H_i, H_j) = -(1/12) Tr_g(ad H_i ad H_j) from the weights of the
// ambient adjoint restricted to the subalgebra. Throws ConsistencyError if the
// result differs from bilinear_form(tag).
BilinearForm verify_form_by_trace(PairTag tag);

// B on a compact basis: (J_1, J_2, J_3) with [J_i, J_j] = eps_ijk J_k for
// su(2) factors, unit imaginary quaternions for sp(1), and i times the charge
// generator for u(1). Defined only for algebras built from A1 and U1 factors
// with a diagonal dual Gram; one entry per basis element.
std::vector<Rational> compact_basis_gram(PairTag tag);

bool is_negative_definite(const RationalMatrix &m);

class CasimirContext {
public:
  explicit CasimirContext(PairTag tag);
  explicit CasimirContext(BilinearForm form);

  const RootData &algebra() const { return form_.algebra; }
  const BilinearForm &form() const { return form_; }
  PairTag tag() const { return form_.tag; }
  // Half-sum of positive roots: 1 on every simple coordinate, 0 on charges.
  const Weight &delta() const { return delta_; }

  Rational pairing(const Weight &a, const Weight &b) const;

private:
  BilinearForm form_;
  Weight delta_;
};

// B(hw, hw) + 2 B(hw, delta).
Rational casimir_eigenvalue(const CasimirContext &ctx, const Weight &hw);

// All dominant weights with casimir value >= floor (floor <= 0), lexicographic.
std::vector<Weight> irreps_with_casimir_at_least(const CasimirContext &ctx, const Rational &floor);

// All dominant weights with casimir value exactly `value`, lexicographic.
std::vector<Weight> irreps_with_casimir(const CasimirContext &ctx, const Rational &value);

struct CasimirLevel {
  Rational value;
  std::vector<Weight> irreps;
};

// The `count` largest (closest to zero) Casimir values, descending, with the
// irreducibles attaining each.
std::vector<CasimirLevel> casimir_levels(const CasimirContext &ctx, std::size_t count);

} // namespace nk
