#pragma once

// JSON form of the coset fixtures. Rationals are {"num": n, "den": d}.

#include "nk/coset_data.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace nk {

inline constexpr int kFixtureSchemaVersion = 1;

nlohmann::json rational_to_json(const Rational &q);
// Throws FixtureError on malformed input or a zero denominator.
Rational rational_from_json(const nlohmann::json &j);

nlohmann::json decomposition_to_json(const RepDecomposition &d);
nlohmann::json coset_to_json(const CosetDescriptor &c);
// Parses and validates one descriptor; throws FixtureError.
CosetDescriptor coset_from_json(const nlohmann::json &j);

// {"schema_version": 1, "cosets": [...]} for the built-in fixtures.
nlohmann::json fixtures_document();
std::vector<CosetDescriptor> fixtures_from_json(const nlohmann::json &doc);
std::vector<CosetDescriptor> load_fixtures(const std::string &path);

} // namespace nk
