#include "doctest.h"

#include "nk/coset_data.hpp"
#include "nk/errors.hpp"
#include "nk/fixtures_io.hpp"

#include <fstream>

using namespace nk;

namespace {

RepDecomposition decomp(const RootData &rd, std::map<Weight, std::int64_t> e) {
  return RepDecomposition(rd, std::move(e));
}

const RationalMatrix kSp2Map{{1, 1}, {1, 0}};

} // namespace

TEST_CASE("names and aliases") {
  for (auto n : all_cosets()) {
    CHECK(parse_coset_name(alias(n)) == n);
    CHECK(parse_coset_name(to_string(n)) == n);
  }
  CHECK(parse_coset_name("SP2") == CosetName::Sp2Sp1U1);
  CHECK_THROWS_AS(parse_coset_name("s6"), PreconditionError);
  CHECK(parse_gauge("su3") == Gauge::SU3);
  CHECK_THROWS_AS(parse_gauge("u1"), PreconditionError);
}

TEST_CASE("cotangent decompositions") {
  const auto &g2 = coset(CosetName::G2Su3);
  CHECK(g2.mstar == decomp(algebra_a2(), {{Weight{1, 0}, 1}, {Weight{0, 1}, 1}}));
  const auto &sp2 = coset(CosetName::Sp2Sp1U1);
  CHECK(sp2.mstar == decomp(algebra_a1_u1(), {{Weight{1, 1}, 1},
                                              {Weight{1, -1}, 1},
                                              {Weight{0, 2}, 1},
                                              {Weight{0, -2}, 1}}));
  CHECK(coset(CosetName::Su2CubedSu2).mstar == decomp(algebra_a1(), {{Weight{2}, 2}}));
  CHECK(coset(CosetName::Su3U1U1).mstar.size() == 6);
  for (auto n : all_cosets()) {
    CHECK(coset(n).mstar.dimension() == 6);
    CHECK(coset(n).mstar_holomorphic.dimension() == 3);
  }
}

TEST_CASE("gauge representations") {
  CHECK(gauge_rep(coset(CosetName::G2Su3), Gauge::H) == decomp(algebra_a2(), {{Weight{1, 1}, 1}}));
  CHECK(gauge_rep(coset(CosetName::G2Su3), Gauge::SU3) == decomp(algebra_a2(), {{Weight{1, 1}, 1}}));
  CHECK(gauge_rep(coset(CosetName::Su2CubedSu2), Gauge::SU3) ==
        decomp(algebra_a1(), {{Weight{2}, 1}, {Weight{4}, 1}}));
  CHECK(gauge_rep(coset(CosetName::Sp2Sp1U1), Gauge::SU3) ==
        decomp(algebra_a1_u1(), {{Weight{2, 0}, 1},
                                 {Weight{0, 0}, 1},
                                 {Weight{1, 3}, 1},
                                 {Weight{1, -3}, 1}}));
  CHECK(gauge_rep(coset(CosetName::Su3U1U1), Gauge::SU3) ==
        decomp(algebra_u1_squared(), {{Weight{0, 0}, 2},
                                      {Weight{3, 0}, 1},
                                      {Weight{-3, 0}, 1},
                                      {Weight{0, 3}, 1},
                                      {Weight{0, -3}, 1},
                                      {Weight{3, -3}, 1},
                                      {Weight{-3, 3}, 1}}));
  CHECK(gauge_rep(coset(CosetName::Su3U1U1), Gauge::H) ==
        decomp(algebra_u1_squared(), {{Weight{0, 0}, 2}}));
  const std::int64_t h_dims[] = {8, 3, 4, 2};
  for (std::size_t i = 0; i < all_cosets().size(); ++i) {
    const auto &c = coset(all_cosets()[i]);
    CHECK(gauge_rep(c, Gauge::SU3).dimension() == 8);
    CHECK(gauge_rep(c, Gauge::H).dimension() == h_dims[i]);
  }
}

TEST_CASE("a (1,0)-part mixing types gives a different su(3)") {
  auto mixed = make_coset(CosetName::Sp2Sp1U1, PairTag::Sp2, PairTag::Sp1U1InSp2, kSp2Map,
                          decomp(algebra_a1_u1(), {{Weight{1, 1}, 1}, {Weight{0, 2}, 1}}));
  CHECK(gauge_rep(mixed, Gauge::SU3) != gauge_rep(coset(CosetName::Sp2Sp1U1), Gauge::SU3));
  auto mixed_t2 = make_coset(
      CosetName::Su3U1U1, PairTag::Su3Ambient, PairTag::U1U1InSu3, RationalMatrix::identity(2),
      decomp(algebra_u1_squared(), {{Weight{2, -1}, 1}, {Weight{-1, 2}, 1}, {Weight{1, 1}, 1}}));
  CHECK(gauge_rep(mixed_t2, Gauge::SU3) != gauge_rep(coset(CosetName::Su3U1U1), Gauge::SU3));
}

TEST_CASE("corrupted fixtures are rejected") {
  auto v = coset(CosetName::Sp2Sp1U1).mstar_holomorphic;
  CHECK_THROWS_AS(make_coset(CosetName::Sp2Sp1U1, PairTag::Sp2, PairTag::Sp1U1InSp2,
                             RationalMatrix{{1, 1}, {0, 1}}, v),
                  FixtureError);
  CHECK_THROWS_AS(make_coset(CosetName::Sp2Sp1U1, PairTag::Sp2, PairTag::Sp1U1InSp2,
                             RationalMatrix{{1, 1}}, v),
                  FixtureError);
  CHECK_THROWS_AS(make_coset(CosetName::Sp2Sp1U1, PairTag::Sp2, PairTag::Sp1U1InSp2, kSp2Map,
                             decomp(algebra_a1_u1(), {{Weight{1, 1}, 1}, {Weight{0, -3}, 1}})),
                  FixtureError);
  CHECK_THROWS_AS(make_coset(CosetName::Sp2Sp1U1, PairTag::G2, PairTag::Sp1U1InSp2, kSp2Map, v),
                  FixtureError);
}

TEST_CASE("fixtures survive a JSON round trip") {
  const auto doc = fixtures_document();
  CHECK(doc.at("schema_version") == kFixtureSchemaVersion);
  const auto loaded = fixtures_from_json(doc);
  REQUIRE(loaded.size() == 4);
  for (const auto &c : loaded) {
    const auto &ref = coset(c.name);
    CHECK(c.mstar == ref.mstar);
    CHECK(c.restriction.matrix() == ref.restriction.matrix());
    CHECK(c.b_h.gram == ref.b_h.gram);
  }
  CHECK(nlohmann::json::parse(doc.dump()) == doc);
}

TEST_CASE("the shipped fixture file matches the built-in fixtures") {
  std::ifstream in(NK_SOURCE_DIR "/data/cosets.json");
  REQUIRE(in.good());
  nlohmann::json file;
  in >> file;
  CHECK(file == fixtures_document());
  CHECK(load_fixtures(NK_SOURCE_DIR "/data/cosets.json").size() == 4);
}

TEST_CASE("malformed JSON fixtures") {
  auto doc = fixtures_document();
  auto bad_version = doc;
  bad_version["schema_version"] = 99;
  CHECK_THROWS_AS(fixtures_from_json(bad_version), FixtureError);
  auto zero_den = doc;
  zero_den["cosets"][2]["restriction"][0][0]["den"] = 0;
  CHECK_THROWS_AS(fixtures_from_json(zero_den), FixtureError);
  auto wrong_map = doc;
  wrong_map["cosets"][0]["restriction"][0][1]["num"] = 0;
  CHECK_THROWS_AS(fixtures_from_json(wrong_map), FixtureError);
  auto wrong_mstar = doc;
  wrong_mstar["cosets"][1]["mstar"][0]["mult"] = 3;
  CHECK_THROWS_AS(fixtures_from_json(wrong_mstar), FixtureError);
  auto dup = doc;
  dup["cosets"][1] = dup["cosets"][0];
  CHECK_THROWS_AS(fixtures_from_json(dup), FixtureError);
  CHECK_THROWS_AS(load_fixtures("/nonexistent/cosets.json"), FixtureError);
}
