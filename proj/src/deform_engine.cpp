#include "nk/deform_engine.hpp"

#include "nk/errors.hpp"

namespace nk {

CurvatureSpectrum curvature_spectrum(const CosetDescriptor &c, Gauge gauge) {
  const CasimirContext h = h_context(c);
  const RepDecomposition e = gauge_rep(c, gauge);

  Rational mstar_cas;
  for (const auto &[hw, m] : c.mstar.entries()) {
    const Rational v = casimir_eigenvalue(h, hw);
    if (v != -4)
      throw ConsistencyError(to_string(c.name) + ": m* component V" + to_string(hw) +
                             " has Casimir " + to_string(v));
    mstar_cas = v;
  }

  std::map<Rational, std::int64_t> spectrum;
  for (const auto &[ea, na] : e.entries()) {
    const Rational cas_e = casimir_eigenvalue(h, ea);
    const RepDecomposition one(e.algebra(), {{ea, 1}});
    const RepDecomposition product = tensor_decompose(one, c.mstar);
    for (const auto &[u, mu] : product.entries()) {
      const Rational eigenvalue = mstar_cas + cas_e - casimir_eigenvalue(h, u);
      spectrum[eigenvalue] += na * mu * weyl_dimension(c.h_data, u).get_si();
    }
  }

  CurvatureSpectrum out;
  std::int64_t total = 0;
  Rational trace = 0;
  for (const auto &[v, m] : spectrum) {
    out.push_back({v, m});
    total += m;
    trace += v * m;
  }
  if (total != 6 * e.dimension())
    throw ConsistencyError(to_string(c.name) + ": curvature spectrum has total dimension " +
                           std::to_string(total));
  if (trace != 0)
    throw ConsistencyError(to_string(c.name) + ": curvature operator has trace " +
                           to_string(trace));
  return out;
}

DeformationSpace deformation_space(const CosetDescriptor &c, Gauge gauge,
                                   const std::optional<RepDecomposition> &components) {
  const CasimirContext g = g_context(c);
  const CasimirContext h = h_context(c);
  const RepDecomposition e = components ? *components : gauge_rep(c, gauge);
  if (!(e.algebra() == c.h_data))
    throw PreconditionError("gauge components must be H-representations");

  DeformationSpace out{c.name, gauge, {}, RepDecomposition(c.g_data), RepDecomposition(c.g_data), 0};
  std::map<Weight, RepDecomposition> branches;
  for (const auto &[ea, na] : e.entries()) {
    DeformationTerm term;
    term.e_alpha = ea;
    term.n_alpha = na;
    term.casimir = casimir_eigenvalue(h, ea);
    term.candidates = irreps_with_casimir(g, term.casimir);
    term.e_tensor_mstar = tensor_decompose(RepDecomposition(c.h_data, {{ea, 1}}), c.mstar);
    for (const auto &w : term.candidates) {
      if (casimir_eigenvalue(g, w) != term.casimir)
        throw ConsistencyError("enumerated irreducible has the wrong Casimir");
      auto it = branches.find(w);
      if (it == branches.end())
        it = branches.emplace(w, branch(c.restriction, w)).first;
      std::int64_t n = 0;
      for (const auto &[u, mu] : term.e_tensor_mstar.entries())
        n += mu * it->second.multiplicity(u);
      if (n > 0) {
        term.counts[w] = n;
        out.complexified.add(w, na * n);
      }
    }
    out.terms.push_back(std::move(term));
  }

  for (const auto &[w, m] : out.complexified.entries()) {
    if (m % 2 != 0)
      throw EvennessError(to_string(c.name) + ": V" + to_string(w) + " occurs " +
                          std::to_string(m) + " times in the complexified solution space");
    out.halved.add(w, m / 2);
  }
  out.real_dimension = out.halved.dimension();
  return out;
}

bool abelian_rigidity_check(const CosetDescriptor &c) {
  RepDecomposition trivial(c.h_data);
  const Weight zero = Weight::zero(c.h_data.coordinate_count());
  trivial.add(zero, gauge_rep(c, Gauge::H).multiplicity(zero));
  return deformation_space(c, Gauge::H, trivial).complexified.empty();
}

} // namespace nk
