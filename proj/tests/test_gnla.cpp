#include "doctest.h"

#include "gnlat/fixtures.hpp"
#include "gnlat/gnla.hpp"

using namespace gnlat;

TEST_CASE("validation of the worked algebras") {
  for (auto make : {heisenberg3, fixture_m4, fixture_m5_prime, fixture_m5_dprime,
                    fixture_m4_prime}) {
    Gnla g = make();
    ValidationReport rep = validate(g.to_data());
    CHECK_MESSAGE(rep.ok(), g.name(), ": ", rep.detail);
  }
  CHECK(fixture_m5_prime().dims() == std::vector<int>{2, 1, 2, 3, 2});
  CHECK(fixture_m5_dprime().dims() == std::vector<int>{2, 1, 2, 3, 4});
  CHECK(fixture_m4_prime().dims() == std::vector<int>{3, 3, 8, 3});
}

TEST_CASE("the depth-4 relations embed in both depth-5 algebras") {
  GnlaData base = fixture_m4().to_data();
  for (auto make : {fixture_m5_prime, fixture_m5_dprime}) {
    GnlaData ext = make().to_data();
    size_t found = 0;
    for (const RawBracket& br : base.brackets) {
      for (const RawBracket& eb : ext.brackets) {
        if (eb.li == br.li && eb.la == br.la && eb.lj == br.lj && eb.lb == br.lb) {
          REQUIRE(eb.value.size() == br.value.size());
          for (size_t t = 0; t < eb.value.size(); ++t) {
            CHECK(eb.value[t].coord == br.value[t].coord);
            CHECK(eb.value[t].value == br.value[t].value);
          }
          ++found;
        }
      }
    }
    CHECK(found == base.brackets.size());
  }
}

TEST_CASE("grading violations are reported") {
  // heis(3) plus a bracket [e1, e3] valued back in degree -1.
  GnlaData d = heisenberg3().to_data();
  RawBracket bad;
  bad.li = 1;
  bad.la = 0;
  bad.lj = 2;
  bad.lb = 0;
  bad.value.push_back({1, 1, rat(1)});
  d.brackets.push_back(bad);
  ValidationReport rep = validate(d);
  CHECK(rep.structure_ok);
  CHECK(!rep.grading_ok);
  CHECK(rep.detail.find("grading") != std::string::npos);
}

TEST_CASE("Jacobi violations are reported with the first bad triple") {
  GnlaBuilder b("bad", {3, 3, 1});
  b.br(1, 1, 1, 2, {{1, rat(1)}});
  b.br(1, 1, 1, 3, {{2, rat(1)}});
  b.br(1, 2, 1, 3, {{3, rat(1)}});
  b.br(1, 1, 2, 3, {{1, rat(1)}});  // [x1, y23] = z, the only depth-3 bracket
  ValidationReport rep = validate(b.data());
  CHECK(rep.structure_ok);
  CHECK(rep.grading_ok);
  CHECK(!rep.jacobi_ok);
  CHECK(rep.detail.find("Jacobi") != std::string::npos);
  CHECK(rep.detail.find("(1,1)(1,2)(1,3)") != std::string::npos);
}

TEST_CASE("center") {
  SUBCASE("heis(3): exactly the deepest layer") {
    GradedSubspace z = center(heisenberg3());
    CHECK(z.layers[0].empty());
    CHECK(z.layers[1].size() == 1);
  }
  SUBCASE("abelian: everything") {
    GradedSubspace z = center(abelian(3));
    CHECK(z.layers[0].size() == 3);
  }
  SUBCASE("m4: top layer only") {
    GradedSubspace z = center(fixture_m4());
    CHECK(z.layers[0].empty());
    CHECK(z.layers[1].empty());
    CHECK(z.layers[2].empty());
    CHECK(z.layers[3].size() == 3);
  }
}

TEST_CASE("fundamentality") {
  CHECK(is_fundamental(heisenberg3()).fundamental);
  CHECK(is_fundamental(fixture_m4_prime()).fundamental);
  CHECK(is_fundamental(fixture_m5_prime()).fundamental);
  FundamentalReport ab = is_fundamental(abelian(2));
  CHECK(!ab.fundamental);
  CHECK(!ab.centerless_degree_one);
  // extension with no brackets into the new top layer
  Gnla dangling = GnlaBuilder("dangling", {2, 1, 1}).br(1, 1, 1, 2, {{1, rat(1)}}).build();
  FundamentalReport rep = is_fundamental(dangling);
  CHECK(!rep.fundamental);
  CHECK(!rep.generated);
}

TEST_CASE("branching surjectivity") {
  SUBCASE("heis(3)") {
    BranchingReport rep = check_branching(heisenberg3());
    CHECK(rep.all_surjective);
    CHECK(rep.ranks == std::vector<int>{1});
  }
  SUBCASE("m5dprime is surjective at every layer") {
    BranchingReport rep = check_branching(fixture_m5_dprime());
    CHECK(rep.all_surjective);
    CHECK(rep.ranks == std::vector<int>{1, 2, 3, 4});
  }
  SUBCASE("a dangling layer is flagged") {
    Gnla dangling = GnlaBuilder("dangling", {2, 1, 1}).br(1, 1, 1, 2, {{1, rat(1)}}).build();
    BranchingReport rep = check_branching(dangling);
    CHECK(!rep.all_surjective);
    CHECK(rep.first_failure == 3);
  }
}

TEST_CASE("quotients") {
  SUBCASE("by the zero subspace: same algebra") {
    Gnla m = fixture_m5_prime();
    GradedSubspace h;
    h.layers.resize(5);
    QuotientResult q = quotient(m, h, "copy");
    CHECK(q.algebra.dims() == m.dims());
    GnlaData a = q.algebra.to_data(), b = m.to_data();
    REQUIRE(a.brackets.size() == b.brackets.size());
    for (size_t i = 0; i < a.brackets.size(); ++i) {
      CHECK(a.brackets[i].li == b.brackets[i].li);
      CHECK(a.brackets[i].value.size() == b.brackets[i].value.size());
    }
  }
  SUBCASE("killing the top layer of m4 gives a depth-3 algebra") {
    Gnla m = fixture_m4();
    GradedSubspace h;
    h.layers.resize(4);
    for (int c = 0; c < 3; ++c) {
      Vec v(3, rat(0));
      v[c] = 1;
      h.layers[3].push_back(v);
    }
    QuotientResult q = quotient(m, h, "m3");
    CHECK(q.algebra.dims() == std::vector<int>{2, 1, 2});
    CHECK(validate(q.algebra.to_data()).ok());
    CHECK(is_fundamental(q.algebra).fundamental);
  }
  SUBCASE("dimension bookkeeping") {
    Gnla m = fixture_m5_dprime();
    GradedSubspace h;
    h.layers.resize(5);
    Vec v(4, rat(0));
    v[0] = 1;
    v[3] = -2;
    h.layers[4].push_back(v);
    QuotientResult q = quotient(m, h, "cut");
    int before = 0, after = 0;
    for (int d : m.dims()) before += d;
    for (int d : q.algebra.dims()) after += d;
    CHECK(before - after == 1);
    CHECK(validate(q.algebra.to_data()).ok());
  }
  SUBCASE("subspaces meeting degree -1 are rejected") {
    GradedSubspace h;
    h.layers.resize(2);
    h.layers[0].push_back(Vec{rat(1), rat(0)});
    CHECK_THROWS_AS((void)quotient(heisenberg3(), h, "x"), MeetsDegreeOneError);
  }
  SUBCASE("non-ideals are rejected") {
    Gnla m = fixture_m4();
    GradedSubspace h;
    h.layers.resize(4);
    h.layers[2].push_back(Vec{rat(1), rat(0)});  // e3_1 alone is not an ideal
    CHECK_THROWS_AS((void)quotient(m, h, "x"), NotAnIdealError);
  }
}

TEST_CASE("growth vectors") {
  CHECK(growth_vector(heisenberg3()) == std::vector<int>{2, 1});
  CHECK(growth_vector(fixture_m4_prime()) == std::vector<int>{3, 3, 8, 3});
}

TEST_CASE("raw data round trip and hashing") {
  Gnla m = fixture_m4_prime();
  Gnla again = Gnla::from_data(m.to_data());
  CHECK(algebra_hash(m) == algebra_hash(again));
  CHECK(algebra_hash(m) != algebra_hash(heisenberg3()));
  // bracket tables agree
  for (int a = 0; a < 3; ++a)
    for (int p = 0; p < 8; ++p)
      CHECK(m.bracket_basis(1, a, 3, p) == again.bracket_basis(1, a, 3, p));
}
