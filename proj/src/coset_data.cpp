#include "nk/coset_data.hpp"

#include "nk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace nk {

namespace {

struct CosetInfo {
  CosetName name;
  const char *display;
  const char *alias;
};

constexpr CosetInfo kCosets[] = {
    {CosetName::G2Su3, "G2/SU(3)", "g2su3"},
    {CosetName::Su2CubedSu2, "SU(2)^3/SU(2)", "su2cubed"},
    {CosetName::Sp2Sp1U1, "Sp(2)/Sp(1)xU(1)", "sp2"},
    {CosetName::Su3U1U1, "SU(3)/U(1)^2", "su3t2"},
};

const CosetInfo &info(CosetName name) {
  for (const auto &i : kCosets)
    if (i.name == name)
      return i;
  throw PreconditionError("unknown coset");
}

void require(bool ok, CosetName name, const std::string &what) {
  if (!ok)
    throw FixtureError(to_string(name) + ": " + what);
}

CosetDescriptor builtin(CosetName name) {
  switch (name) {
  case CosetName::G2Su3: {
    RepDecomposition v(algebra_a2(), {{Weight{1, 0}, 1}});
    return make_coset(name, PairTag::G2, PairTag::Su3InG2, RationalMatrix{{1, 1}, {0, 1}}, v);
  }
  case CosetName::Su2CubedSu2: {
    RepDecomposition v(algebra_a1(), {{Weight{2}, 1}});
    return make_coset(name, PairTag::Su2Cubed, PairTag::Su2DiagonalInSu2Cubed,
                      RationalMatrix{{1, 1, 1}}, v);
  }
  case CosetName::Sp2Sp1U1: {
    RepDecomposition v(algebra_a1_u1(), {{Weight{1, 1}, 1}, {Weight{0, -2}, 1}});
    return make_coset(name, PairTag::Sp2, PairTag::Sp1U1InSp2, RationalMatrix{{1, 1}, {1, 0}}, v);
  }
  case CosetName::Su3U1U1: {
    RepDecomposition v(algebra_u1_squared(),
                       {{Weight{2, -1}, 1}, {Weight{-1, 2}, 1}, {Weight{-1, -1}, 1}});
    return make_coset(name, PairTag::Su3Ambient, PairTag::U1U1InSu3, RationalMatrix::identity(2),
                      v);
  }
  }
  throw PreconditionError("unknown coset");
}

RepDecomposition adjoint(const RootData &rd) {
  return RepDecomposition(rd, rd.adjoint_components());
}

} // namespace

const std::vector<CosetName> &all_cosets() {
  static const std::vector<CosetName> names = {CosetName::G2Su3, CosetName::Su2CubedSu2,
                                               CosetName::Sp2Sp1U1, CosetName::Su3U1U1};
  return names;
}

std::string to_string(CosetName name) { return info(name).display; }

std::string alias(CosetName name) { return info(name).alias; }

CosetName parse_coset_name(const std::string &text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (const auto &i : kCosets) {
    std::string display = i.display;
    std::transform(display.begin(), display.end(), display.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == i.alias || lower == display)
      return i.name;
  }
  throw PreconditionError("unknown coset '" + text + "' (known: g2su3, su2cubed, sp2, su3t2)");
}

std::string to_string(Gauge gauge) { return gauge == Gauge::H ? "H" : "SU3"; }

Gauge parse_gauge(const std::string &text) {
  if (text == "H" || text == "h")
    return Gauge::H;
  if (text == "SU3" || text == "su3")
    return Gauge::SU3;
  throw PreconditionError("unknown gauge '" + text + "' (known: H, SU3)");
}

RepDecomposition conjugate(const RepDecomposition &d) { return peel_off(d.character().dual()); }

CasimirContext g_context(const CosetDescriptor &c) { return CasimirContext(c.b_g); }
CasimirContext h_context(const CosetDescriptor &c) { return CasimirContext(c.b_h); }

CosetDescriptor make_coset(CosetName name, PairTag g_tag, PairTag h_tag, RationalMatrix restriction,
                           RepDecomposition mstar_holomorphic) {
  const auto &g_emb = pair_embedding(g_tag);
  const auto &h_emb = pair_embedding(h_tag);
  require(g_emb.sub == g_emb.ambient, name, "G form tag must name an ambient algebra");
  require(h_emb.ambient == g_emb.ambient, name, "H form tag refers to a different ambient algebra");
  RestrictionMap map = [&] {
    try {
      return RestrictionMap(g_emb.ambient, h_emb.sub, std::move(restriction));
    } catch (const MalformedEmbeddingError &e) {
      throw FixtureError(to_string(name) + ": " + e.what());
    }
  }();
  require(mstar_holomorphic.algebra() == h_emb.sub, name,
          "(1,0)-part does not live over H");
  RepDecomposition mstar = mstar_holomorphic;
  mstar += conjugate(mstar_holomorphic);
  CosetDescriptor c{name,
                    g_emb.ambient,
                    h_emb.sub,
                    std::move(map),
                    bilinear_form(g_tag),
                    bilinear_form(h_tag),
                    std::move(mstar),
                    std::move(mstar_holomorphic)};
  validate(c);
  return c;
}

void validate(const CosetDescriptor &c) {
  const CosetName n = c.name;
  require(c.mstar_holomorphic.dimension() == 3, n, "(1,0)-part must have dimension 3");
  require(c.mstar.dimension() == 6, n, "m* must have dimension 6");
  RepDecomposition expected = c.mstar_holomorphic;
  expected += conjugate(c.mstar_holomorphic);
  require(c.mstar == expected, n, "m* must be the (1,0)-part plus its conjugate");
  require(c.b_g.algebra == c.g_data && c.b_h.algebra == c.h_data, n,
          "forms live over the wrong algebras");
  require(c.restriction.source() == c.g_data && c.restriction.target() == c.h_data, n,
          "restriction map has the wrong source or target");

  const CasimirContext h = h_context(c);
  for (const auto &[hw, m] : c.mstar.entries())
    require(casimir_eigenvalue(h, hw) == -4, n,
            "component V" + to_string(hw) + " of m* has H-Casimir " +
                to_string(casimir_eigenvalue(h, hw)) + ", expected -4");

  RepDecomposition restricted;
  try {
    restricted = branch(c.restriction, adjoint(c.g_data));
  } catch (const Error &e) {
    throw FixtureError(to_string(n) + ": restricting the adjoint of G failed: " + e.what());
  }
  RepDecomposition split = adjoint(c.h_data);
  split += c.mstar;
  require(restricted == split, n,
          "adjoint of G restricts to " + to_string(restricted) + ", expected h + m* = " +
              to_string(split));
}

const CosetDescriptor &coset(CosetName name) {
  static std::once_flag once;
  static std::vector<CosetDescriptor> table;
  std::call_once(once, [] {
    for (auto n : all_cosets())
      table.push_back(builtin(n));
  });
  for (const auto &c : table)
    if (c.name == name)
      return c;
  throw PreconditionError("unknown coset");
}

RepDecomposition gauge_rep(const CosetDescriptor &c, Gauge gauge) {
  if (gauge == Gauge::H)
    return adjoint(c.h_data);
  RepDecomposition out = tensor_decompose(c.mstar_holomorphic, conjugate(c.mstar_holomorphic));
  out.remove(Weight::zero(c.h_data.coordinate_count()));
  if (out.dimension() != 8)
    throw ConsistencyError(to_string(c.name) + ": su(3) gauge representation has dimension " +
                           std::to_string(out.dimension()));
  return out;
}

} // namespace nk
