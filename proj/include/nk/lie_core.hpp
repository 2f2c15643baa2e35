#pragma once

// Root systems, weight lattices and weight multiplicities for reductive
// algebras built from simple factors (A_n, C2, G2) and abelian u(1) factors.
//
// Weights are integer vectors in the fundamental-weight basis, one block of
// `rank` coordinates per simple factor followed in factor order by one charge
// per u(1) factor. A highest weight (a label of an irreducible) uses the same
// coordinates.

#include "nk/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nk {

class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : coords_(coords) {}
  static Weight zero(std::size_t n) { return Weight(std::vector<int>(n, 0)); }

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int &operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int> &coords() const { return coords_; }
  bool is_zero() const;

  Weight &operator+=(const Weight &o);
  Weight &operator-=(const Weight &o);
  friend Weight operator+(Weight a, const Weight &b) { return a += b; }
  friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(int k, Weight a);

  friend auto operator<=>(const Weight &, const Weight &) = default;
  friend bool operator==(const Weight &, const Weight &) = default;

private:
  std::vector<int> coords_;
};

// "(1,-1,0)"
std::string to_string(const Weight &w);
std::ostream &operator<<(std::ostream &os, const Weight &w);

enum class FactorKind { A, C, G, U1 };

// One simple factor: Cartan matrix with the convention alpha_i = sum_j A(i,j) lambda_j,
// i.e. A(i,j) = <alpha_i, alpha_j^vee>. Positive roots are generated from it.
class SimpleFactor {
public:
  SimpleFactor(FactorKind kind, std::vector<std::vector<int>> cartan);

  FactorKind kind() const { return kind_; }
  std::size_t rank() const { return cartan_.size(); }
  std::string name() const;
  const std::vector<std::vector<int>> &cartan() const { return cartan_; }

  // Simple-root coordinates of each positive root, ascending height.
  const std::vector<std::vector<int>> &positive_roots() const { return positive_roots_; }
  // The same roots in fundamental-weight coordinates.
  const std::vector<Weight> &positive_roots_fund() const { return positive_roots_fund_; }
  // Simple-coroot coordinates of alpha^vee for each positive root, so that
  // <mu, alpha^vee> = sum_j mu_j * coroot[j].
  const std::vector<std::vector<int>> &positive_coroots() const { return positive_coroots_; }
  // (alpha_i, alpha_i) under the default normalisation (shortest root squared length 2).
  const std::vector<Rational> &simple_root_lengths() const { return root_lengths_; }
  // Default W-invariant positive-definite form on fundamental weights.
  const RationalMatrix &default_gram() const { return default_gram_; }
  // Inverse Cartan matrix transposed: fundamental -> simple-root coordinates.
  const RationalMatrix &fund_to_root() const { return fund_to_root_; }
  Weight highest_root() const;
  std::size_t dimension() const { return rank() + 2 * positive_roots_.size(); }

  friend bool operator==(const SimpleFactor &a, const SimpleFactor &b) {
    return a.kind_ == b.kind_ && a.cartan_ == b.cartan_;
  }

private:
  FactorKind kind_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> positive_roots_;
  std::vector<Weight> positive_roots_fund_;
  std::vector<std::vector<int>> positive_coroots_;
  std::vector<Rational> root_lengths_;
  RationalMatrix default_gram_;
  RationalMatrix fund_to_root_;
};

SimpleFactor type_a(std::size_t n);
// C2 labelled so that alpha_1 is the long simple root: lambda_1 is the
// highest weight of the 5-dimensional irreducible of sp(2), lambda_2 of the 4-dimensional one.
SimpleFactor type_c2();
// G2 labelled so that alpha_1 is the short simple root: lambda_1 is the 7-dimensional irreducible.
SimpleFactor type_g2();

class Factor {
public:
  static Factor simple(SimpleFactor f);
  static Factor u1();

  bool is_abelian() const { return !simple_; }
  const SimpleFactor &simple_factor() const;
  std::size_t coordinate_count() const { return simple_ ? simple_->rank() : 1; }
  std::string name() const { return simple_ ? simple_->name() : "U1"; }

  friend bool operator==(const Factor &a, const Factor &b);

private:
  std::shared_ptr<const SimpleFactor> simple_;
};

// Ordered list of factors of a reductive algebra.
class RootData {
public:
  RootData() = default;
  explicit RootData(std::vector<Factor> factors);

  const std::vector<Factor> &factors() const { return factors_; }
  std::size_t coordinate_count() const { return coordinate_count_; }
  std::size_t offset(std::size_t factor) const { return offsets_[factor]; }
  std::size_t simple_rank() const;
  std::string name() const;
  std::size_t dimension() const;

  bool is_dominant(const Weight &w) const;
  void require_weight(const Weight &w) const;
  void require_dominant(const Weight &w) const;

  // Simple roots enumerated across factors; returns (factor, local index).
  std::vector<std::pair<std::size_t, std::size_t>> simple_root_indices() const;
  // s_i(w) for the i-th simple root in simple_root_indices() order.
  Weight reflect(const Weight &w, std::size_t simple_index) const;

  // Sum of simple-root coordinates over simple factors (charges ignored).
  Rational height(const Weight &w) const;

  // Highest weights of the complexified adjoint: highest root of each simple
  // factor plus one trivial summand per u(1) factor.
  std::map<Weight, std::int64_t> adjoint_components() const;

  friend bool operator==(const RootData &a, const RootData &b) { return a.factors_ == b.factors_; }

private:
  std::vector<Factor> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t coordinate_count_ = 0;
};

// Convenience constructors for the algebras used by the four cosets.
RootData algebra_a1();
RootData algebra_a2();
RootData algebra_c2();
RootData algebra_g2();
RootData algebra_a1_cubed();
RootData algebra_a1_u1();
RootData algebra_u1_squared();

// Multiset of weights with multiplicities; the carrier of characters.
class WeightCharacter {
public:
  WeightCharacter() = default;
  explicit WeightCharacter(RootData algebra) : algebra_(std::move(algebra)) {}

  const RootData &algebra() const { return algebra_; }
  const std::map<Weight, std::int64_t> &entries() const { return entries_; }
  std::int64_t multiplicity(const Weight &w) const;
  std::int64_t total() const;
  bool empty() const { return entries_.empty(); }

  // Adds k (possibly negative) copies of w; zero entries are dropped.
  void add(const Weight &w, std::int64_t k);
  WeightCharacter &operator+=(const WeightCharacter &o);
  WeightCharacter &operator-=(const WeightCharacter &o);
  WeightCharacter scaled(std::int64_t k) const;
  // Character of the dual representation (all weights negated).
  WeightCharacter dual() const;

  friend WeightCharacter operator*(const WeightCharacter &a, const WeightCharacter &b);
  friend bool operator==(const WeightCharacter &a, const WeightCharacter &b) {
    return a.algebra_ == b.algebra_ && a.entries_ == b.entries_;
  }

private:
  RootData algebra_;
  std::map<Weight, std::int64_t> entries_;
};

// Optional per-simple-factor W-invariant positive-definite Gram matrices on
// fundamental weights, used in the Freudenthal recursion in place of the
// default form. Indexed by factor position; entries for u(1) factors ignored.
using FactorForms = std::vector<std::optional<RationalMatrix>>;

// Full weight system of the irreducible with highest weight hw.
// Throws PreconditionError if hw is not dominant.
WeightCharacter weight_multiplicities(const RootData &root_data, const Weight &hw,
                                      const FactorForms &forms = {});

// Weyl dimension formula alone.
Integer weyl_dimension(const RootData &root_data, const Weight &hw);

// Dimension computed by weight counting and by the Weyl formula; throws
// ConsistencyError if they differ.
std::int64_t dimension(const RootData &root_data, const Weight &hw);

// Dominant weights with simple coordinates in [0, bound] and |charge| <= bound,
// lexicographic order.
std::vector<Weight> dominant_weights_in_box(const RootData &root_data, int bound);

} // namespace nk
