#include "doctest.h"

#include "nk/errors.hpp"
#include "nk/forms_casimir.hpp"

#include <functional>

using namespace nk;

namespace {

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RationalMatrix m2(Rational a, Rational b, Rational c, Rational d) { return {{a, b}, {c, d}}; }

// Brute force over a generous box, independent of the enumeration bound.
std::vector<Weight> brute_force(const CasimirContext &ctx, const Rational &value, int box) {
  std::vector<Weight> out;
  const auto &rd = ctx.algebra();
  for (const auto &w : dominant_weights_in_box(rd, box))
    if (casimir_eigenvalue(ctx, w) == value)
      out.push_back(w);
  return out;
}

} // namespace

TEST_CASE("pair tags round-trip") {
  for (auto tag : all_pair_tags())
    CHECK(parse_pair_tag(to_string(tag)) == tag);
  CHECK_THROWS_AS(parse_pair_tag("e8"), PreconditionError);
}

TEST_CASE("Gram matrices on fundamental weights") {
  CHECK(bilinear_form(PairTag::Su3InG2).gram ==
        m2(-1, Rational(-1, 2), Rational(-1, 2), -1));
  CHECK(bilinear_form(PairTag::G2).gram == m2(-1, Rational(-3, 2), Rational(-3, 2), -3));
  CHECK(bilinear_form(PairTag::Sp2).gram == m2(-2, -1, -1, -1));
  CHECK(bilinear_form(PairTag::Su3Ambient).gram ==
        m2(Rational(-4, 3), Rational(-2, 3), Rational(-2, 3), Rational(-4, 3)));
  CHECK(bilinear_form(PairTag::G2).dual_gram == m2(-4, 2, 2, Rational(-4, 3)));
  for (auto tag : all_pair_tags()) {
    auto f = bilinear_form(tag);
    CHECK(f.gram.is_symmetric());
    CHECK(is_negative_definite(f.gram));
    CHECK(f.gram * f.dual_gram == RationalMatrix::identity(f.gram.rows()));
  }
}

TEST_CASE("trace normalisation reproduces every stored form") {
  for (auto tag : all_pair_tags())
    CHECK(verify_form_by_trace(tag).dual_gram == bilinear_form(tag).dual_gram);
}

TEST_CASE("su(3) inside g2 versus su(3) on its own differ by 4/3") {
  CHECK(bilinear_form(PairTag::Su3Ambient).gram ==
        bilinear_form(PairTag::Su3InG2).gram * Rational(4, 3));
}

TEST_CASE("compact bases") {
  auto diag = compact_basis_gram(PairTag::Su2DiagonalInSu2Cubed);
  CHECK(diag == std::vector<Rational>(3, Rational(1, 2)));
  auto cubed = compact_basis_gram(PairTag::Su2Cubed);
  CHECK(cubed == std::vector<Rational>(9, Rational(1, 6)));
  auto sp1u1 = compact_basis_gram(PairTag::Sp1U1InSp2);
  CHECK(sp1u1 == std::vector<Rational>(4, Rational(1)));
  CHECK_THROWS_AS(compact_basis_gram(PairTag::G2), PreconditionError);
}

TEST_CASE("Casimir eigenvalues at sample weights") {
  CasimirContext g2(PairTag::G2), sp2(PairTag::Sp2), cubed(PairTag::Su2Cubed),
      u1u1(PairTag::U1U1InSu3);
  CHECK(casimir_eigenvalue(g2, Weight{1, 0}) == -6);
  CHECK(casimir_eigenvalue(g2, Weight{0, 1}) == -12);
  CHECK(casimir_eigenvalue(sp2, Weight{1, 1}) == -15);
  CHECK(casimir_eigenvalue(cubed, Weight{1, 1, 1}) == Rational(-27, 2));
  CHECK(casimir_eigenvalue(u1u1, Weight{3, 0}) == -12);
  CHECK_THROWS_AS(casimir_eigenvalue(g2, Weight{-1, 0}), PreconditionError);
  for (auto tag : all_pair_tags()) {
    CasimirContext ctx(tag);
    CHECK(casimir_eigenvalue(ctx, Weight::zero(ctx.algebra().coordinate_count())) == 0);
  }
}

TEST_CASE("Casimir matches closed forms on a sweep") {
  using F = std::function<Rational(int, int)>;
  const std::pair<PairTag, F> cases[] = {
      {PairTag::G2, [](int a, int b) { return Rational(-(a * a + 3 * b * b + 3 * a * b + 5 * a + 9 * b)); }},
      {PairTag::Su3InG2, [](int a, int b) { return Rational(-(a * a + b * b + a * b + 3 * a + 3 * b)); }},
      {PairTag::Su3Ambient,
       [](int a, int b) { return frac(-4 * (a * a + b * b + a * b + 3 * a + 3 * b), 3); }},
      {PairTag::Sp2, [](int a, int b) { return Rational(-(2 * a * a + 2 * a * b + b * b + 6 * a + 4 * b)); }},
      {PairTag::Sp1U1InSp2, [](int m, int n) { return Rational(-m * (m + 2) - n * n); }},
      {PairTag::U1U1InSu3, [](int a, int b) { return frac(-4 * (a * a + a * b + b * b), 3); }},
  };
  for (const auto &[tag, closed] : cases) {
    CasimirContext ctx(tag);
    const bool charges = ctx.algebra().factors().back().is_abelian();
    for (int a = 0; a <= 5; ++a)
      for (int b = charges ? -5 : 0; b <= 5; ++b) {
        const int a0 = tag == PairTag::U1U1InSu3 ? a - 2 : a;
        CHECK(casimir_eigenvalue(ctx, Weight{a0, b}) == closed(a0, b));
      }
  }
  CasimirContext cubed(PairTag::Su2Cubed);
  for (const auto &w : dominant_weights_in_box(cubed.algebra(), 5)) {
    Rational expect = 0;
    for (int i = 0; i < 3; ++i)
      expect -= Rational(3, 2) * w[i] * (w[i] + 2);
    CHECK(casimir_eigenvalue(cubed, w) == expect);
  }
}

TEST_CASE("monotone along simple coordinates") {
  for (auto tag : all_pair_tags()) {
    CasimirContext ctx(tag);
    const auto &rd = ctx.algebra();
    for (const auto &w : dominant_weights_in_box(rd, 3))
      for (const auto &[f, j] : rd.simple_root_indices()) {
        Weight up = w;
        up[rd.offset(f) + j] += 1;
        CHECK(casimir_eigenvalue(ctx, up) < casimir_eigenvalue(ctx, w));
      }
  }
  CasimirContext sp1u1(PairTag::Sp1U1InSp2);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      CHECK(casimir_eigenvalue(sp1u1, Weight{m, n + 1}) < casimir_eigenvalue(sp1u1, Weight{m, n}));
      CHECK(casimir_eigenvalue(sp1u1, Weight{m, -n - 1}) < casimir_eigenvalue(sp1u1, Weight{m, -n}));
    }
}

TEST_CASE("two charges are not monotone in each charge separately") {
  CasimirContext u1u1(PairTag::U1U1InSu3);
  CHECK(casimir_eigenvalue(u1u1, Weight{0, -2}) == Rational(-16, 3));
  CHECK(casimir_eigenvalue(u1u1, Weight{1, -2}) == -4);
}

TEST_CASE("irreducibles with a given Casimir value") {
  CHECK(irreps_with_casimir(CasimirContext(PairTag::Sp2), -8) == std::vector<Weight>{{1, 0}});
  CHECK(irreps_with_casimir(CasimirContext(PairTag::Su2Cubed), -4).empty());
  CHECK(irreps_with_casimir(CasimirContext(PairTag::Su3Ambient), -12) ==
        std::vector<Weight>{{1, 1}});
  CHECK(irreps_with_casimir(CasimirContext(PairTag::G2), -9).empty());
  CHECK(irreps_with_casimir(CasimirContext(PairTag::Su2Cubed), -12) ==
        std::vector<Weight>{{0, 0, 2}, {0, 2, 0}, {2, 0, 0}});
  CHECK(irreps_with_casimir(CasimirContext(PairTag::G2), 3).empty());
}

TEST_CASE("enumeration agrees with brute force") {
  for (auto tag : all_pair_tags()) {
    CasimirContext ctx(tag);
    for (int v = 0; v <= 40; ++v)
      for (int den : {1, 2, 3}) {
        const Rational value = frac(-v, den);
        CHECK(irreps_with_casimir(ctx, value) == brute_force(ctx, value, 12));
      }
  }
}

TEST_CASE("Casimir levels") {
  auto g2 = casimir_levels(CasimirContext(PairTag::G2), 3);
  REQUIRE(g2.size() == 3);
  CHECK(g2[0].value == 0);
  CHECK(g2[1].value == -6);
  CHECK(g2[2].value == -12);
  CHECK(g2[2].irreps == std::vector<Weight>{{0, 1}});
  auto sp2 = casimir_levels(CasimirContext(PairTag::Sp2), 5);
  std::vector<Rational> values;
  for (const auto &l : sp2)
    values.push_back(l.value);
  CHECK(values == std::vector<Rational>{0, -5, -8, -12, -15});
}
