#include "doctest.h"

#include "gnlat/fixtures.hpp"
#include "gnlat/freelie.hpp"
#include "gnlat/specfile.hpp"

using namespace gnlat;

TEST_CASE("algebra files round trip") {
  for (auto make : {fixture_m5_prime, fixture_m4_prime, heisenberg3}) {
    Gnla g = make();
    Json j = algebra_to_json(g);
    GnlaData d = algebra_from_json(j);
    ValidationReport rep = validate(d);
    REQUIRE(rep.ok());
    CHECK(algebra_hash(*rep.algebra) == algebra_hash(g));
    // serialization is stable
    CHECK(algebra_to_json(*rep.algebra).dump(2) == j.dump(2));
  }
}

TEST_CASE("provenance round trips through files") {
  FreeTruncated f(2, 5, 5000);
  std::vector<std::vector<Vec>> ideal(5);
  ideal[4] = f.isotypic_component(5, {3});
  TrackedQuotient q = tracked_quotient(f, ideal, "m5p_q");
  Json j = algebra_to_json(q.algebra);
  GnlaData d = algebra_from_json(j);
  REQUIRE(d.provenance.has_value());
  TrackedQuotient q2 = from_provenance(*d.provenance, d.name);
  CHECK(algebra_hash(q2.algebra) == algebra_hash(q.algebra));
}

TEST_CASE("strict parsing") {
  Json good = algebra_to_json(heisenberg3());
  SUBCASE("unknown top-level keys are rejected") {
    Json j = good;
    j["extra"] = 1;
    CHECK_THROWS_AS((void)algebra_from_json(j), SpecFileError);
  }
  SUBCASE("non-canonical pair order is rejected") {
    Json j = good;
    j["brackets"][0]["left"] = Json::array({1, 2});
    j["brackets"][0]["right"] = Json::array({1, 1});
    CHECK_THROWS_AS((void)algebra_from_json(j), SpecFileError);
  }
  SUBCASE("malformed rationals are rejected") {
    for (const char* bad : {"1/0", "1/-2", "x", "", "1.5", "+3", "2/ 3"}) {
      Json j = good;
      j["brackets"][0]["value"][0][1] = bad;
      CHECK_THROWS_AS((void)algebra_from_json(j), SpecFileError);
    }
  }
  SUBCASE("accepted rationals are canonicalized") {
    Json j = good;
    j["brackets"][0]["value"][0][1] = "2/4";
    GnlaData d = algebra_from_json(j);
    CHECK(d.brackets[0].value[0].value == rat(1, 2));
  }
  SUBCASE("out-of-range coordinates are rejected") {
    Json j = good;
    j["brackets"][0]["value"][0][0] = 5;
    CHECK_THROWS_AS((void)algebra_from_json(j), SpecFileError);
  }
  SUBCASE("brackets beyond the depth are rejected") {
    Json j = good;
    Json e;
    e["left"] = Json::array({1, 1});
    e["right"] = Json::array({2, 1});
    e["value"] = Json::array({Json::array({1, "1"})});
    j["brackets"].push_back(e);
    CHECK_THROWS_AS((void)algebra_from_json(j), SpecFileError);
  }
  SUBCASE("duplicate pairs are rejected") {
    Json j = good;
    j["brackets"].push_back(j["brackets"][0]);
    CHECK_THROWS_AS((void)algebra_from_json(j), SpecFileError);
  }
  SUBCASE("zero stored values are rejected") {
    Json j = good;
    j["brackets"][0]["value"][0][1] = "0";
    CHECK_THROWS_AS((void)algebra_from_json(j), SpecFileError);
  }
}

TEST_CASE("ideal files") {
  Gnla m = fixture_m4();
  std::vector<std::vector<Vec>> layers(4);
  Vec v(3, rat(0));
  v[0] = rat(1);
  v[2] = rat(-2, 3);
  layers[3].push_back(v);
  Json j = ideal_to_json(layers);
  auto back = ideal_from_json(j, m.dims());
  REQUIRE(back[3].size() == 1);
  CHECK(back[3][0] == v);
  CHECK(back[0].empty());
}
