#include "nk/cli.hpp"

#include "nk/clifford6.hpp"
#include "nk/deform_engine.hpp"
#include "nk/errors.hpp"
#include "nk/fixtures_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace nk {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string fixtures;
  std::string which;
  std::string pair;
  std::string coset_name;
  std::string algebra;
  std::string hw, a, b;
};

// Failures the user can fix by changing the command line.
struct UsageError : Error {
  using Error::Error;
};

Weight parse_weight(const std::string &text) {
  std::vector<int> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw UsageError("cannot parse weight '" + text + "': expected comma-separated integers");
    coords.push_back(v);
  }
  if (coords.empty())
    throw UsageError("empty weight");
  return Weight(coords);
}

json weight_json(const Weight &w) { return json(w.coords()); }

RootData parse_algebra(const std::string &text) {
  std::string t;
  for (char c : text)
    t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "su2" || t == "a1" || t == "sp1")
    return algebra_a1();
  if (t == "su3" || t == "a2")
    return algebra_a2();
  if (t == "sp2" || t == "c2")
    return algebra_c2();
  if (t == "g2")
    return algebra_g2();
  if (t == "su2cubed" || t == "a1^3")
    return algebra_a1_cubed();
  if (t == "sp1u1" || t == "a1u1")
    return algebra_a1_u1();
  if (t == "u1u1" || t == "t2")
    return algebra_u1_squared();
  throw UsageError("unknown algebra '" + text + "' (known: su2, su3, sp2, g2, su2cubed, sp1u1, u1u1)");
}

class CosetSource {
public:
  explicit CosetSource(const std::string &path) {
    if (!path.empty())
      loaded_ = load_fixtures(path);
  }

  const CosetDescriptor &get(CosetName name) const {
    if (!loaded_)
      return coset(name);
    for (const auto &c : *loaded_)
      if (c.name == name)
        return c;
    throw FixtureError("fixtures file has no entry for " + to_string(name));
  }

  std::vector<const CosetDescriptor *> all() const {
    std::vector<const CosetDescriptor *> out;
    for (auto name : all_cosets())
      if (!loaded_)
        out.push_back(&coset(name));
      else
        for (const auto &c : *loaded_)
          if (c.name == name)
            out.push_back(&c);
    return out;
  }

private:
  std::optional<std::vector<CosetDescriptor>> loaded_;
};

struct Result {
  json input;
  json result;
  std::string text;
  bool failed = false;
  std::string failure;
};

std::string pad(const std::string &s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

// ---------------------------------------------------------------------------

Result curvature_tables(const CosetSource &src) {
  Result r;
  json tables = json::array();
  std::ostringstream text;
  for (auto name : {CosetName::G2Su3, CosetName::Su2CubedSu2, CosetName::Sp2Sp1U1}) {
    const auto &c = src.get(name);
    const auto spectrum = curvature_spectrum(c, Gauge::H);
    json rows = json::array();
    Rational trace = 0;
    std::int64_t total = 0;
    text << to_string(name) << "\n  " << pad("eigenvalue", 12) << "dimension\n";
    for (const auto &e : spectrum) {
      rows.push_back({{"eigenvalue", rational_to_json(e.eigenvalue)}, {"dimension", e.multiplicity}});
      trace += e.eigenvalue * e.multiplicity;
      total += e.multiplicity;
      text << "  " << pad(to_string(e.eigenvalue), 12) << e.multiplicity << "\n";
    }
    const auto dim_h = static_cast<std::int64_t>(c.h_data.dimension());
    text << "  trace " << to_string(trace) << ", total dimension " << total << " = 6 dim h\n";
    tables.push_back({{"coset", to_string(name)},
                      {"spectrum", rows},
                      {"trace", rational_to_json(trace)},
                      {"total_dimension", total},
                      {"dim_h", dim_h}});
    if (trace != 0 || total != 6 * dim_h) {
      r.failed = true;
      r.failure = "spectrum invariants fail for " + to_string(name);
    }
  }
  r.result = {{"tables", tables}};
  r.text = text.str();
  return r;
}

json term_json(const DeformationTerm &t) {
  json counts = json::array();
  for (const auto &[w, n] : t.counts)
    counts.push_back({{"hw", weight_json(w)}, {"mult", n}});
  json candidates = json::array();
  for (const auto &w : t.candidates)
    candidates.push_back(weight_json(w));
  return {{"e_alpha", weight_json(t.e_alpha)},
          {"n_alpha", t.n_alpha},
          {"casimir", rational_to_json(t.casimir)},
          {"candidates", candidates},
          {"e_tensor_mstar", decomposition_to_json(t.e_tensor_mstar)},
          {"counts", counts}};
}

Result deformation_table(const CosetSource &src, Gauge gauge) {
  Result r;
  json rows = json::array();
  std::ostringstream text;
  text << "gauge " << to_string(gauge) << "\n  " << pad("coset", 20) << pad("real dim", 10)
       << "deformations\n";
  for (const auto *c : src.all()) {
    const auto space = deformation_space(*c, gauge);
    rows.push_back({{"coset", to_string(c->name)},
                    {"real_dimension", space.real_dimension},
                    {"complexified", decomposition_to_json(space.complexified)},
                    {"decomposition", decomposition_to_json(space.halved)},
                    {"terms", [&] {
                       json terms = json::array();
                       for (const auto &t : space.terms)
                         terms.push_back(term_json(t));
                       return terms;
                     }()}});
    text << "  " << pad(to_string(c->name), 20) << pad(std::to_string(space.real_dimension), 10)
         << (space.halved.empty() ? "0" : to_string(space.halved)) << "\n";
  }
  r.result = {{"gauge", to_string(gauge)}, {"rows", rows}};
  r.text = text.str();
  return r;
}

Result cmd_tables(const Options &o, const CosetSource &src) {
  Result r;
  if (o.which == "prop-4.2")
    r = curvature_tables(src);
  else if (o.which == "thm-5.2-H")
    r = deformation_table(src, Gauge::H);
  else if (o.which == "thm-5.2-SU3")
    r = deformation_table(src, Gauge::SU3);
  else
    throw UsageError("unknown table '" + o.which + "' (known: prop-4.2, thm-5.2-H, thm-5.2-SU3)");
  r.input = {{"table", o.which}};
  return r;
}

Result cmd_casimir(const Options &o) {
  const CasimirContext ctx(parse_pair_tag(o.pair));
  const Weight hw = parse_weight(o.hw);
  ctx.algebra().require_dominant(hw);
  const Rational value = casimir_eigenvalue(ctx, hw);
  Result r;
  r.input = {{"pair", to_string(ctx.tag())}, {"hw", weight_json(hw)}};
  r.result = {{"algebra", ctx.algebra().name()}, {"casimir", rational_to_json(value)}};
  r.text = "Cas" + to_string(hw) + " = " + to_string(value) + "\n";
  return r;
}

Result decomposition_result(const RepDecomposition &d) {
  Result r;
  r.result = {{"algebra", d.algebra().name()},
              {"dimension", d.dimension()},
              {"decomposition", decomposition_to_json(d)}};
  r.text = to_string(d) + "\n";
  return r;
}

Result cmd_branch(const Options &o, const CosetSource &src) {
  const auto &c = src.get(parse_coset_name(o.coset_name));
  const Weight hw = parse_weight(o.hw);
  c.g_data.require_dominant(hw);
  Result r = decomposition_result(branch(c.restriction, hw));
  r.input = {{"coset", to_string(c.name)}, {"hw", weight_json(hw)}};
  return r;
}

Result cmd_tensor(const Options &o) {
  const RootData rd = parse_algebra(o.algebra);
  const Weight a = parse_weight(o.a), b = parse_weight(o.b);
  rd.require_dominant(a);
  rd.require_dominant(b);
  Result r = decomposition_result(tensor_decompose(rd, a, b));
  r.input = {{"algebra", rd.name()}, {"a", weight_json(a)}, {"b", weight_json(b)}};
  return r;
}

Result cmd_clifford_verify() {
  const auto &rep = build_rep();
  const Spinor psi = basis_spinor(0);
  const PQ pq = extract_pq(rep, psi);
  Result r;
  std::ostringstream text;
  json checks = json::array();
  auto record = [&](const std::string &id, const std::string &description, bool passed,
                    const std::string &detail) {
    checks.push_back({{"id", id}, {"description", description}, {"passed", passed}, {"detail", detail}});
    text << (passed ? "PASS " : "FAIL ") << pad("(" + id + ")", 16) << description
         << (detail.empty() ? "" : "  [" + detail + "]") << "\n";
    if (!passed && !r.failed) {
      r.failed = true;
      r.failure = "check (" + id + ") failed: " + description;
    }
  };

  for (const auto &c : run_identity_suite(rep, psi))
    record(c.id, c.description, c.passed, c.detail);

  const Rational norm = pq.p.norm2();
  record("norm-P", "|P|^2 = 4", norm == 4, "|P|^2 = " + to_string(norm));

  const auto table = spinor_decomposition_spectra(rep, psi);
  const std::array<Rational, 3> want_p{4, 0, -4}, want_q{-3, 1, -3};
  std::string row_p, row_q;
  for (std::size_t i = 0; i < 3; ++i) {
    row_p += (i ? ", " : "") + to_string(table.p[i]);
    row_q += (i ? ", " : "") + to_string(table.q[i]);
  }
  record("spinor-table", "P, Q on span(psi), {u psi}, span(Vol psi)",
         table.p == want_p && table.q == want_q, "P: " + row_p + "; Q: " + row_q);

  const auto j = complex_structure(rep, psi);
  const auto omega = kaehler_form(rep, psi);
  record("omega", "omega from J equals *Q", omega == hodge(pq.q), "");

  bool hodge_ok = true;
  for (int k = 0; k <= kDim; ++k)
    for (int i = 0; i < kBlades; ++i)
      if (grade_of(static_cast<std::uint8_t>(i)) == k) {
        const auto e = Multivector::basis(static_cast<std::uint8_t>(i));
        hodge_ok = hodge_ok && hodge(hodge(e)) == e * Rational((k * (6 - k)) % 2 ? -1 : 1);
      }
  record("hodge", "** = (-1)^(k(6-k)) on k-forms", hodge_ok, "");

  const auto spec = q_contraction_spectrum(rep, psi);
  json spaces = json::array();
  std::size_t total = 0, instanton = 0;
  Rational weighted = 0, trace = 0;
  std::string spectrum_text;
  for (const auto &s : spec.spaces) {
    spaces.push_back({{"eigenvalue", rational_to_json(s.eigenvalue)}, {"dimension", s.dimension}});
    total += s.dimension;
    weighted += s.eigenvalue * static_cast<long>(s.dimension);
    if (s.eigenvalue == -1)
      instanton = s.dimension;
    spectrum_text += (spectrum_text.empty() ? "" : ", ") + to_string(s.eigenvalue) + ":" +
                     std::to_string(s.dimension);
  }
  for (std::size_t i = 0; i < spec.operator_matrix.rows(); ++i)
    trace += spec.operator_matrix(i, i);
  record("q-spectrum", "contraction with Q on two-forms: dimensions exhaust 15, trace matches",
         total == 15 && weighted == trace, spectrum_text + "; trace " + to_string(trace));
  record("instanton-dim", "(-1)-eigenspace of contraction with Q has dimension 8", instanton == 8,
         "dimension " + std::to_string(instanton));

  r.input = {{"spinor", "e_1"}};
  r.result = {{"checks", checks},
              {"norm_p_squared", rational_to_json(norm)},
              {"spinor_table",
               {{"subspaces", {"psi", "u psi", "Vol psi"}},
                {"P", {rational_to_json(table.p[0]), rational_to_json(table.p[1]), rational_to_json(table.p[2])}},
                {"Q", {rational_to_json(table.q[0]), rational_to_json(table.q[1]), rational_to_json(table.q[2])}}}},
              {"complex_structure", [&] {
                 json rows = json::array();
                 for (int a = 0; a < kDim; ++a) {
                   json row = json::array();
                   for (int b = 0; b < kDim; ++b)
                     row.push_back(rational_to_json(j(a, b)));
                   rows.push_back(row);
                 }
                 return rows;
               }()},
              {"kaehler_form", to_string(omega)},
              {"P", to_string(pq.p)},
              {"Q", to_string(pq.q)},
              {"q_contraction",
               {{"spectrum", spaces},
                {"total_dimension", total},
                {"trace", rational_to_json(trace)},
                {"instanton_dimension", instanton},
                {"omega_eigenvalue", rational_to_json(spec.omega_eigenvalue)}}}};
  text << "P = " << to_string(pq.p) << "\nQ = " << to_string(pq.q) << "\nomega = " << to_string(omega)
       << "\nspectrum of contraction with Q on two-forms: " << spectrum_text
       << "; omega has eigenvalue " << to_string(spec.omega_eigenvalue) << "\n";
  r.text = text.str();
  return r;
}

void emit(const std::string &command, const Options &o, const Result &r, std::ostream &out) {
  if (o.format == "json") {
    json input = r.input;
    if (!o.fixtures.empty())
      input["fixtures"] = o.fixtures;
    const json doc = {{"command", command}, {"input", input}, {"result", r.result}, {"version", kEngineVersion}};
    out << doc.dump(2) << "\n";
  } else {
    out << r.text;
  }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Instanton deformation tables for homogeneous nearly Kaehler six-manifolds", "nkdeform"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--fixtures", o.fixtures, "Load coset data from a JSON fixtures file");

  auto *tables = app.add_subcommand("tables", "Curvature spectra and deformation tables");
  tables->add_option("which", o.which, "prop-4.2 | thm-5.2-H | thm-5.2-SU3")->required();
  auto *casimir = app.add_subcommand("casimir", "Casimir eigenvalue of an irreducible");
  casimir->add_option("--pair", o.pair, "Algebra with its invariant form")->required();
  casimir->add_option("--hw", o.hw, "Highest weight, e.g. 0,1")->required();
  auto *branch_cmd = app.add_subcommand("branch", "Restrict a G-irreducible to H");
  branch_cmd->add_option("--coset", o.coset_name, "g2su3 | su2cubed | sp2 | su3t2")->required();
  branch_cmd->add_option("--hw", o.hw, "Highest weight of G")->required();
  auto *tensor = app.add_subcommand("tensor", "Decompose a tensor product of two irreducibles");
  tensor->add_option("--algebra", o.algebra, "su2 | su3 | sp2 | g2 | su2cubed | sp1u1 | u1u1")->required();
  tensor->add_option("--a", o.a, "First highest weight")->required();
  tensor->add_option("--b", o.b, "Second highest weight")->required();
  auto *clifford_cmd = app.add_subcommand("clifford-verify", "Check the Cl(0,6) spinor identities");
  auto *export_cmd = app.add_subcommand("export-fixtures", "Print the built-in coset fixtures as JSON");
  for (auto *sub : app.get_subcommands({}))
    sub->fallthrough();

  std::vector<std::string> storage{"nkdeform"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &s : storage)
    argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  std::string command;
  try {
    if (export_cmd->parsed()) {
      out << fixtures_document().dump(2) << "\n";
      return kExitOk;
    }
    const CosetSource src(o.fixtures);
    Result r;
    if (tables->parsed()) {
      command = "tables";
      r = cmd_tables(o, src);
    } else if (casimir->parsed()) {
      command = "casimir";
      r = cmd_casimir(o);
    } else if (branch_cmd->parsed()) {
      command = "branch";
      r = cmd_branch(o, src);
    } else if (tensor->parsed()) {
      command = "tensor";
      r = cmd_tensor(o);
    } else if (clifford_cmd->parsed()) {
      command = "clifford-verify";
      r = cmd_clifford_verify();
    }
    emit(command, o, r, out);
    if (r.failed) {
      err << "nkdeform: " << r.failure << "\n";
      return kExitInvariant;
    }
    return kExitOk;
  } catch (const UsageError &e) {
    err << "nkdeform: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError &e) {
    err << "nkdeform: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FixtureError &e) {
    err << "nkdeform: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    err << "nkdeform: invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  }
}

} // namespace nk
