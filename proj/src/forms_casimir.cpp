#include "nk/forms_casimir.hpp"

#include "nk/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace nk {

namespace {

struct TagInfo {
  PairTag tag;
  const char *name;
};

constexpr TagInfo kTags[] = {
    {PairTag::Su3InG2, "su3-in-g2"},
    {PairTag::G2, "g2"},
    {PairTag::Su2DiagonalInSu2Cubed, "su2-diagonal-in-su2cubed"},
    {PairTag::Su2Cubed, "su2cubed"},
    {PairTag::Sp1U1InSp2, "sp1u1-in-sp2"},
    {PairTag::Sp2, "sp2"},
    {PairTag::U1U1InSu3, "u1u1-in-su3"},
    {PairTag::Su3Ambient, "su3-ambient"},
};

PairEmbedding make_embedding(PairTag tag) {
  auto self = [tag](RootData rd) {
    RestrictionMap id(rd, rd, RationalMatrix::identity(rd.coordinate_count()));
    return PairEmbedding{tag, rd, rd, id};
  };
  switch (tag) {
  case PairTag::Su3InG2:
    return {tag, algebra_g2(), algebra_a2(),
            RestrictionMap(algebra_g2(), algebra_a2(), RationalMatrix{{1, 1}, {0, 1}})};
  case PairTag::G2:
    return self(algebra_g2());
  case PairTag::Su2DiagonalInSu2Cubed:
    return {tag, algebra_a1_cubed(), algebra_a1(),
            RestrictionMap(algebra_a1_cubed(), algebra_a1(), RationalMatrix{{1, 1, 1}})};
  case PairTag::Su2Cubed:
    return self(algebra_a1_cubed());
  case PairTag::Sp1U1InSp2:
    return {tag, algebra_c2(), algebra_a1_u1(),
            RestrictionMap(algebra_c2(), algebra_a1_u1(), RationalMatrix{{1, 1}, {1, 0}})};
  case PairTag::Sp2:
    return self(algebra_c2());
  case PairTag::U1U1InSu3:
    return {tag, algebra_a2(), algebra_u1_squared(),
            RestrictionMap(algebra_a2(), algebra_u1_squared(), RationalMatrix::identity(2))};
  case PairTag::Su3Ambient:
    return self(algebra_a2());
  }
  throw PreconditionError("unknown pair tag");
}

// B(H_i, H_j) on the basis dual to the fundamental weights.
RationalMatrix stored_dual_gram(PairTag tag) {
  const Rational third(1, 3);
  switch (tag) {
  case PairTag::Su3InG2:
    return {{Rational(-4, 3), Rational(2, 3)}, {Rational(2, 3), Rational(-4, 3)}};
  case PairTag::G2:
    return {{-4, 2}, {2, Rational(-4, 3)}};
  case PairTag::Su2DiagonalInSu2Cubed:
    return {{-2}};
  case PairTag::Su2Cubed:
    return RationalMatrix::diagonal({-2 * third, -2 * third, -2 * third});
  case PairTag::Sp1U1InSp2:
    return RationalMatrix::diagonal({-1, -1});
  case PairTag::Sp2:
    return {{-1, 1}, {1, -2}};
  case PairTag::U1U1InSu3:
  case PairTag::Su3Ambient:
    return {{-1, Rational(1, 2)}, {Rational(1, 2), -1}};
  }
  throw PreconditionError("unknown pair tag");
}

} // namespace

const std::vector<PairTag> &all_pair_tags() {
  static const std::vector<PairTag> tags = [] {
    std::vector<PairTag> t;
    for (const auto &info : kTags)
      t.push_back(info.tag);
    return t;
  }();
  return tags;
}

std::string to_string(PairTag tag) {
  for (const auto &info : kTags)
    if (info.tag == tag)
      return info.name;
  throw PreconditionError("unknown pair tag");
}

PairTag parse_pair_tag(const std::string &text) {
  for (const auto &info : kTags)
    if (text == info.name)
      return info.tag;
  std::string known;
  for (const auto &info : kTags)
    known += std::string(known.empty() ? "" : ", ") + info.name;
  throw PreconditionError("unknown pair tag '" + text + "' (known: " + known + ")");
}

const PairEmbedding &pair_embedding(PairTag tag) {
  static const std::vector<PairEmbedding> table = [] {
    std::vector<PairEmbedding> t;
    for (const auto &info : kTags)
      t.push_back(make_embedding(info.tag));
    return t;
  }();
  for (const auto &e : table)
    if (e.tag == tag)
      return e;
  throw PreconditionError("unknown pair tag");
}

bool is_negative_definite(const RationalMatrix &m) {
  if (!m.is_square() || !m.is_symmetric())
    return false;
  const auto minors = leading_principal_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int sign = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != sign)
      return false;
  }
  return true;
}

BilinearForm bilinear_form(PairTag tag) {
  const auto &emb = pair_embedding(tag);
  RationalMatrix dual = stored_dual_gram(tag);
  if (dual.rows() != emb.sub.coordinate_count())
    throw ConsistencyError("stored Gram matrix has the wrong size for " + to_string(tag));
  if (!is_negative_definite(dual))
    throw ConsistencyError("stored Gram matrix for " + to_string(tag) +
                           " is not symmetric negative definite");
  RationalMatrix gram = inverse(dual);
  // Factors must not mix: the form is block diagonal along the factor blocks,
  // except that u(1) charges may pair with each other.
  const auto &factors = emb.sub.factors();
  for (std::size_t f = 0; f < factors.size(); ++f)
    for (std::size_t g = 0; g < factors.size(); ++g) {
      if (f == g || (factors[f].is_abelian() && factors[g].is_abelian()))
        continue;
      for (std::size_t i = 0; i < factors[f].coordinate_count(); ++i)
        for (std::size_t j = 0; j < factors[g].coordinate_count(); ++j)
          if (gram(emb.sub.offset(f) + i, emb.sub.offset(g) + j) != 0)
            throw ConsistencyError("form for " + to_string(tag) + " couples distinct factors");
    }
  return BilinearForm{tag, emb.sub, std::move(gram), std::move(dual)};
}

BilinearForm verify_form_by_trace(PairTag tag) {
  const auto &emb = pair_embedding(tag);
  const std::size_t n = emb.sub.coordinate_count();
  WeightCharacter adjoint(emb.ambient);
  for (const auto &[hw, m] : emb.ambient.adjoint_components())
    adjoint += weight_multiplicities(emb.ambient, hw).scaled(m);
  const WeightCharacter restricted = emb.restriction.apply(adjoint);

  RationalMatrix trace(n, n);
  for (const auto &[w, m] : restricted.entries())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        trace(i, j) += Rational(m) * w[i] * w[j];
  RationalMatrix dual = trace * Rational(-1, 12);

  BilinearForm stored = bilinear_form(tag);
  if (dual != stored.dual_gram) {
    std::ostringstream os;
    os << "trace form for " << to_string(tag) << " is " << dual << ", stored " << stored.dual_gram;
    throw ConsistencyError(os.str());
  }
  return BilinearForm{tag, emb.sub, inverse(dual), dual};
}

std::vector<Rational> compact_basis_gram(PairTag tag) {
  const BilinearForm form = bilinear_form(tag);
  const auto &rd = form.algebra;
  std::vector<Rational> out;
  for (std::size_t f = 0; f < rd.factors().size(); ++f) {
    const std::size_t k = rd.offset(f);
    for (std::size_t j = 0; j < form.dual_gram.cols(); ++j)
      if (j != k && form.dual_gram(k, j) != 0)
        throw PreconditionError("no diagonal compact basis for " + to_string(tag));
    const auto &factor = rd.factors()[f];
    if (factor.is_abelian()) {
      // K = i H, B(K, K) = -B(H, H)
      out.push_back(-form.dual_gram(k, k));
      continue;
    }
    if (factor.simple_factor().rank() != 1)
      throw PreconditionError("no diagonal compact basis for " + to_string(tag));
    // J_i = (i/2) H for su(2) with [J_i, J_j] = eps_ijk J_k; the quaternion
    // units of sp(1) are i H.
    const bool quaternionic = tag == PairTag::Sp1U1InSp2;
    const Rational c2 = quaternionic ? Rational(1) : Rational(1, 4);
    for (int i = 0; i < 3; ++i)
      out.push_back(-c2 * form.dual_gram(k, k));
  }
  return out;
}

CasimirContext::CasimirContext(PairTag tag) : CasimirContext(bilinear_form(tag)) {}

CasimirContext::CasimirContext(BilinearForm form) : form_(std::move(form)) {
  const auto &rd = form_.algebra;
  delta_ = Weight::zero(rd.coordinate_count());
  for (const auto &[f, j] : rd.simple_root_indices())
    delta_[rd.offset(f) + j] = 1;
}

Rational CasimirContext::pairing(const Weight &a, const Weight &b) const {
  algebra().require_weight(a);
  algebra().require_weight(b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (a[i] != 0 && b[j] != 0)
        s += form_.gram(i, j) * a[i] * b[j];
  return s;
}

Rational casimir_eigenvalue(const CasimirContext &ctx, const Weight &hw) {
  ctx.algebra().require_dominant(hw);
  return ctx.pairing(hw, hw) + 2 * ctx.pairing(hw, ctx.delta());
}

std::vector<Weight> irreps_with_casimir_at_least(const CasimirContext &ctx, const Rational &floor) {
  if (floor > 0)
    return {};
  const Rational budget = -floor;
  const auto &rd = ctx.algebra();
  const auto &g = ctx.form().gram;
  const std::size_t n = rd.coordinate_count();

  std::vector<bool> charge(n, false);
  for (std::size_t f = 0; f < rd.factors().size(); ++f)
    if (rd.factors()[f].is_abelian())
      charge[rd.offset(f)] = true;

  // Simple coordinates: -Cas is a sum of non-negative terms, so
  // -Cas >= -G_ii k^2 - 2 k (G delta)_i along coordinate i.
  // Charges: -Cas restricted to the charge block is a positive definite
  // quadratic form S, and |n_i| <= sqrt(budget * (S^-1)_ii).
  std::vector<int> lo(n, 0), hi(n, 0);
  std::vector<std::size_t> charge_idx;
  for (std::size_t i = 0; i < n; ++i)
    if (charge[i])
      charge_idx.push_back(i);
  RationalMatrix s_inv;
  if (!charge_idx.empty()) {
    RationalMatrix s(charge_idx.size(), charge_idx.size());
    for (std::size_t a = 0; a < charge_idx.size(); ++a)
      for (std::size_t b = 0; b < charge_idx.size(); ++b)
        s(a, b) = -g(charge_idx[a], charge_idx[b]);
    s_inv = inverse(s);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (charge[i]) {
      std::size_t a = std::find(charge_idx.begin(), charge_idx.end(), i) - charge_idx.begin();
      const Rational bound2 = budget * s_inv(a, a);
      int k = 0;
      while (Rational((k + 1) * (k + 1)) <= bound2)
        ++k;
      lo[i] = -k;
      hi[i] = k;
      continue;
    }
    Rational gd = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!charge[j] && g(i, j) > 0)
        throw ConsistencyError("form is not monotone along simple coordinates");
      if (!charge[j])
        gd += g(i, j);
      else if (g(i, j) != 0)
        throw ConsistencyError("form couples simple coordinates with charges");
    }
    if (gd >= 0)
      throw ConsistencyError("B(lambda_i, delta) must be negative");
    int k = 0;
    while (-g(i, i) * (k + 1) * (k + 1) - 2 * (k + 1) * gd <= budget)
      ++k;
    hi[i] = k;
  }

  std::vector<Weight> out;
  std::vector<int> cur = lo;
  for (;;) {
    Weight w(cur);
    if (casimir_eigenvalue(ctx, w) >= floor)
      out.push_back(w);
    std::size_t k = n;
    bool done = true;
    while (k > 0) {
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        done = false;
        break;
      }
      cur[k] = lo[k];
    }
    if (done)
      break;
  }
  return out;
}

std::vector<Weight> irreps_with_casimir(const CasimirContext &ctx, const Rational &value) {
  std::vector<Weight> out;
  for (auto &w : irreps_with_casimir_at_least(ctx, value))
    if (casimir_eigenvalue(ctx, w) == value)
      out.push_back(std::move(w));
  return out;
}

std::vector<CasimirLevel> casimir_levels(const CasimirContext &ctx, std::size_t count) {
  Rational floor = -1;
  for (;;) {
    std::map<Rational, std::vector<Weight>, std::greater<>> levels;
    for (auto &w : irreps_with_casimir_at_least(ctx, floor))
      levels[casimir_eigenvalue(ctx, w)].push_back(std::move(w));
    if (levels.size() >= count) {
      std::vector<CasimirLevel> out;
      for (auto &[v, ws] : levels) {
        if (out.size() == count)
          break;
        out.push_back({v, std::move(ws)});
      }
      return out;
    }
    floor *= 2;
  }
}

} // namespace nk
