#include "doctest.h"

#include "nk/errors.hpp"
#include "nk/lie_core.hpp"

#include <set>

using namespace nk;

namespace {

// Adjoint character read straight off the root system: every root once,
// zero weight rank times. The Freudenthal recursion never sees roots this way.
WeightCharacter adjoint_from_roots(const RootData &rd) {
  const auto &sf = rd.factors().front().simple_factor();
  WeightCharacter c(rd);
  for (const auto &r : sf.positive_roots_fund()) {
    c.add(r, 1);
    c.add(-r, 1);
  }
  c.add(Weight::zero(sf.rank()), static_cast<std::int64_t>(sf.rank()));
  return c;
}

bool weyl_invariant(const RootData &rd, const WeightCharacter &c) {
  for (std::size_t i = 0; i < rd.simple_root_indices().size(); ++i)
    for (const auto &[w, m] : c.entries())
      if (c.multiplicity(rd.reflect(w, i)) != m)
        return false;
  return true;
}

} // namespace

TEST_CASE("root systems have the expected sizes") {
  CHECK(type_a(1).positive_roots().size() == 1);
  CHECK(type_a(2).positive_roots().size() == 3);
  CHECK(type_c2().positive_roots().size() == 4);
  CHECK(type_g2().positive_roots().size() == 6);
  CHECK(type_g2().dimension() == 14);
  CHECK(type_c2().dimension() == 10);
  CHECK(type_g2().highest_root() == Weight{0, 1});
  CHECK(type_c2().highest_root() == Weight{0, 2});
  CHECK(type_a(2).highest_root() == Weight{1, 1});
}

TEST_CASE("root lengths follow the labelling") {
  auto g = type_g2().simple_root_lengths();
  CHECK(g[0] == 2);
  CHECK(g[1] == 6);
  auto c = type_c2().simple_root_lengths();
  CHECK(c[0] == 4);
  CHECK(c[1] == 2);
}

TEST_CASE("invalid Cartan matrices are rejected") {
  CHECK_THROWS_AS(SimpleFactor(FactorKind::A, {{2, 1}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(SimpleFactor(FactorKind::A, {{2, 0}, {0, 2}}), PreconditionError);
  CHECK_THROWS_AS(SimpleFactor(FactorKind::A, {{2, -1}, {0, 2}}), PreconditionError);
}

TEST_CASE("A1 string of weights") {
  auto rd = algebra_a1();
  for (int n = 0; n <= 6; ++n) {
    auto c = weight_multiplicities(rd, Weight{n});
    CHECK(c.total() == n + 1);
    for (int k = -n; k <= n; k += 2)
      CHECK(c.multiplicity(Weight{k}) == 1);
  }
}

TEST_CASE("adjoint characters match the root systems") {
  for (auto rd : {algebra_a1(), algebra_a2(), algebra_c2(), algebra_g2()}) {
    const Weight hr = rd.factors().front().simple_factor().highest_root();
    auto c = weight_multiplicities(rd, hr);
    CHECK(c == adjoint_from_roots(rd));
  }
}

TEST_CASE("small irreducibles") {
  CHECK(weight_multiplicities(algebra_g2(), Weight{1, 0}).total() == 7);
  CHECK(weight_multiplicities(algebra_g2(), Weight{1, 0}).multiplicity(Weight{0, 0}) == 1);
  CHECK(weight_multiplicities(algebra_c2(), Weight{1, 0}).total() == 5);
  CHECK(weight_multiplicities(algebra_c2(), Weight{0, 1}).total() == 4);
  CHECK(weight_multiplicities(algebra_a2(), Weight{3, 0}).total() == 10);
  CHECK(weight_multiplicities(algebra_a2(), Weight{2, 2}).multiplicity(Weight{0, 0}) == 3);
}

TEST_CASE("weight systems are Weyl invariant and dimensions agree") {
  for (auto rd : {algebra_a2(), algebra_c2(), algebra_g2()})
    for (const auto &hw : dominant_weights_in_box(rd, 3)) {
      auto c = weight_multiplicities(rd, hw);
      CHECK(weyl_invariant(rd, c));
      CHECK(weyl_dimension(rd, hw) == c.total());
    }
}

TEST_CASE("multiplicities do not depend on the choice of invariant form") {
  auto rd = algebra_g2();
  RationalMatrix scaled = type_g2().default_gram() * Rational(7, 3);
  FactorForms forms{scaled};
  for (const auto &hw : dominant_weights_in_box(rd, 2))
    CHECK(weight_multiplicities(rd, hw, forms) == weight_multiplicities(rd, hw));
}

TEST_CASE("products and u(1) charges") {
  auto rd = algebra_a1_u1();
  auto c = weight_multiplicities(rd, Weight{1, -3});
  CHECK(c.total() == 2);
  CHECK(c.multiplicity(Weight{1, -3}) == 1);
  CHECK(c.multiplicity(Weight{-1, -3}) == 1);
  CHECK(dimension(algebra_a1_cubed(), Weight{2, 2, 0}) == 9);
  CHECK(dimension(algebra_u1_squared(), Weight{-1, 5}) == 1);
  CHECK(algebra_a1_cubed().dimension() == 9);
  CHECK(algebra_a1_u1().adjoint_components().size() == 2);
}

TEST_CASE("non-dominant highest weights are rejected") {
  CHECK_THROWS_AS(weight_multiplicities(algebra_a2(), Weight{-1, 0}), PreconditionError);
  CHECK_THROWS_AS(weight_multiplicities(algebra_a2(), Weight{1}), PreconditionError);
  // charges may be negative
  CHECK_NOTHROW(weight_multiplicities(algebra_a1_u1(), Weight{0, -2}));
}

TEST_CASE("characters multiply like tensor products") {
  auto rd = algebra_a2();
  auto v = weight_multiplicities(rd, Weight{1, 0});
  auto prod = v * v.dual();
  CHECK(prod.total() == 9);
  CHECK(prod.multiplicity(Weight{0, 0}) == 3);
}

TEST_CASE("dominant box enumeration") {
  auto box = dominant_weights_in_box(algebra_a1_u1(), 1);
  CHECK(box.size() == 6);
  CHECK(box.front() == Weight{0, -1});
  CHECK(box.back() == Weight{1, 1});
}
