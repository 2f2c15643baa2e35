#pragma once

// Tensor products and branching by character arithmetic and highest-weight
// peel-off.

#include "nk/lie_core.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nk {

// Multiset of irreducibles, keyed by dominant highest weight.
class RepDecomposition {
public:
  RepDecomposition() = default;
  explicit RepDecomposition(RootData algebra) : algebra_(std::move(algebra)) {}
  RepDecomposition(RootData algebra, std::map<Weight, std::int64_t> entries);

  const RootData &algebra() const { return algebra_; }
  const std::map<Weight, std::int64_t> &entries() const { return entries_; }
  std::int64_t multiplicity(const Weight &hw) const;
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  void add(const Weight &hw, std::int64_t k = 1);
  // Removes k copies; throws PreconditionError if fewer are present.
  void remove(const Weight &hw, std::int64_t k = 1);
  RepDecomposition &operator+=(const RepDecomposition &o);

  // Sum of mult * dim over the components.
  std::int64_t dimension() const;
  WeightCharacter character() const;

  friend bool operator==(const RepDecomposition &a, const RepDecomposition &b) {
    return a.algebra_ == b.algebra_ && a.entries_ == b.entries_;
  }

private:
  RootData algebra_;
  std::map<Weight, std::int64_t> entries_;
};

// "V(1,0) + 2V(0,2)"
std::string to_string(const RepDecomposition &d);

// Linear map from G weights to H weights in fundamental-weight coordinates;
// rows index H coordinates, columns G coordinates.
class RestrictionMap {
public:
  RestrictionMap() = default;
  RestrictionMap(RootData source, RootData target, RationalMatrix matrix);

  const RootData &source() const { return source_; }
  const RootData &target() const { return target_; }
  const RationalMatrix &matrix() const { return matrix_; }

  // Throws MalformedEmbeddingError when the image is not integral.
  Weight apply(const Weight &w) const;
  WeightCharacter apply(const WeightCharacter &c) const;

private:
  RootData source_;
  RootData target_;
  RationalMatrix matrix_;
};

// Highest-weight extraction. Throws NotACharacterError if the input is not a
// non-negative combination of irreducible characters.
RepDecomposition peel_off(const WeightCharacter &c);

RepDecomposition tensor_decompose(const RootData &algebra, const Weight &a, const Weight &b);
// Tensor product of two decompositions over the same algebra.
RepDecomposition tensor_decompose(const RepDecomposition &a, const RepDecomposition &b);

RepDecomposition branch(const RestrictionMap &map, const Weight &hw);
RepDecomposition branch(const RestrictionMap &map, const RepDecomposition &d);

} // namespace nk
