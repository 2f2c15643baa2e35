#include "nk/fixtures_io.hpp"

#include "nk/errors.hpp"

#include <fstream>

namespace nk {

using nlohmann::json;

json rational_to_json(const Rational &q) {
  return json{{"num", q.get_num().get_si()}, {"den", q.get_den().get_si()}};
}

Rational rational_from_json(const json &j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") ||
      !j.at("num").is_number_integer() || !j.at("den").is_number_integer())
    throw FixtureError("rational must be {\"num\": int, \"den\": int}, got " + j.dump());
  const long den = j.at("den").get<long>();
  if (den == 0)
    throw FixtureError("rational with zero denominator");
  Rational q(j.at("num").get<long>(), den);
  q.canonicalize();
  return q;
}

json decomposition_to_json(const RepDecomposition &d) {
  json out = json::array();
  for (const auto &[hw, m] : d.entries())
    out.push_back(json{{"hw", hw.coords()}, {"mult", m}});
  return out;
}

namespace {

RepDecomposition decomposition_from_json(const RootData &rd, const json &j, const std::string &what) {
  if (!j.is_array())
    throw FixtureError(what + " must be an array");
  RepDecomposition d(rd);
  for (const auto &entry : j) {
    try {
      const auto hw = entry.at("hw").get<std::vector<int>>();
      const auto m = entry.at("mult").get<std::int64_t>();
      if (m < 1)
        throw FixtureError(what + ": multiplicities must be positive");
      d.add(Weight(hw), m);
    } catch (const json::exception &e) {
      throw FixtureError(what + ": " + e.what());
    } catch (const PreconditionError &e) {
      throw FixtureError(what + ": " + e.what());
    }
  }
  return d;
}

} // namespace

json coset_to_json(const CosetDescriptor &c) {
  json matrix = json::array();
  for (std::size_t i = 0; i < c.restriction.matrix().rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < c.restriction.matrix().cols(); ++j)
      row.push_back(rational_to_json(c.restriction.matrix()(i, j)));
    matrix.push_back(row);
  }
  return json{{"name", to_string(c.name)},
              {"alias", alias(c.name)},
              {"g_form", to_string(c.b_g.tag)},
              {"h_form", to_string(c.b_h.tag)},
              {"restriction", matrix},
              {"mstar_holomorphic", decomposition_to_json(c.mstar_holomorphic)},
              {"mstar", decomposition_to_json(c.mstar)}};
}

CosetDescriptor coset_from_json(const json &j) {
  try {
    const CosetName name = parse_coset_name(j.at("name").get<std::string>());
    if (j.contains("alias") && parse_coset_name(j.at("alias").get<std::string>()) != name)
      throw FixtureError(to_string(name) + ": alias does not match name");
    const PairTag g_tag = parse_pair_tag(j.at("g_form").get<std::string>());
    const PairTag h_tag = parse_pair_tag(j.at("h_form").get<std::string>());
    const auto &rows = j.at("restriction");
    if (!rows.is_array() || rows.empty() || !rows.front().is_array())
      throw FixtureError(to_string(name) + ": restriction must be a non-empty matrix");
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols())
        throw FixtureError(to_string(name) + ": ragged restriction matrix");
      for (std::size_t col = 0; col < m.cols(); ++col)
        m(r, col) = rational_from_json(rows[r][col]);
    }
    const RootData h_data = pair_embedding(h_tag).sub;
    auto v = decomposition_from_json(h_data, j.at("mstar_holomorphic"),
                                     to_string(name) + " mstar_holomorphic");
    CosetDescriptor c = make_coset(name, g_tag, h_tag, std::move(m), std::move(v));
    if (j.contains("mstar") &&
        decomposition_from_json(h_data, j.at("mstar"), to_string(name) + " mstar") != c.mstar)
      throw FixtureError(to_string(name) + ": listed m* differs from the (1,0)-part plus conjugate");
    return c;
  } catch (const json::exception &e) {
    throw FixtureError(std::string("malformed coset fixture: ") + e.what());
  } catch (const PreconditionError &e) {
    throw FixtureError(std::string("malformed coset fixture: ") + e.what());
  }
}

json fixtures_document() {
  json cosets = json::array();
  for (auto n : all_cosets())
    cosets.push_back(coset_to_json(coset(n)));
  return json{{"schema_version", kFixtureSchemaVersion}, {"cosets", cosets}};
}

std::vector<CosetDescriptor> fixtures_from_json(const json &doc) {
  if (!doc.is_object() || !doc.contains("schema_version") || !doc.contains("cosets"))
    throw FixtureError("fixture document needs schema_version and cosets");
  if (doc.at("schema_version") != kFixtureSchemaVersion)
    throw FixtureError("unsupported fixture schema version " + doc.at("schema_version").dump());
  std::vector<CosetDescriptor> out;
  for (const auto &entry : doc.at("cosets")) {
    CosetDescriptor c = coset_from_json(entry);
    for (const auto &seen : out)
      if (seen.name == c.name)
        throw FixtureError("duplicate fixture for " + to_string(c.name));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CosetDescriptor> load_fixtures(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw FixtureError("cannot open fixture file " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception &e) {
    throw FixtureError("cannot parse fixture file " + path + ": " + e.what());
  }
  return fixtures_from_json(doc);
}

} // namespace nk
