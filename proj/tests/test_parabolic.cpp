#include "doctest.h"

#include "gnlat/parabolic.hpp"

#include <set>

using namespace gnlat;

namespace {

WeightVec wv(std::initializer_list<int> l) { return WeightVec(l); }

IrrepSum sum_of(std::initializer_list<std::pair<WeightVec, long long>> l) {
  IrrepSum s;
  for (const auto& [w, m] : l) s[w] = m;
  return s;
}

}  // namespace

TEST_CASE("Chevalley structure constants") {
  SUBCASE("A2: all constants are +-1 and Jacobi holds") {
    ChevalleyBasis cb(build_root_system('A', 2));
    const auto& rs = cb.roots();
    for (size_t a = 0; a < rs.positive.size(); ++a)
      for (size_t b = 0; b < rs.positive.size(); ++b) {
        long long n = cb.n_pos(static_cast<int>(a), static_cast<int>(b));
        if (n != 0) CHECK(std::abs(n) == 1);
      }
    CHECK(chevalley_jacobi_exhaustive(cb));
  }
  SUBCASE("G2: constants of absolute value 2 and 3 appear") {
    ChevalleyBasis cb(build_root_system('G', 2));
    std::set<long long> values;
    const auto& rs = cb.roots();
    for (size_t a = 0; a < rs.positive.size(); ++a)
      for (size_t b = 0; b < rs.positive.size(); ++b)
        values.insert(std::abs(cb.n_pos(static_cast<int>(a), static_cast<int>(b))));
    CHECK(values.count(2) == 1);
    CHECK(values.count(3) == 1);
    CHECK(chevalley_jacobi_exhaustive(cb));
  }
  SUBCASE("Jacobi holds exhaustively across types") {
    for (auto [s, r] : {std::pair{'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4},
                        {'F', 4}, {'E', 6}}) {
      ChevalleyBasis cb(build_root_system(s, r));
      CHECK_MESSAGE(chevalley_jacobi_exhaustive(cb), s, r);
    }
  }
  SUBCASE("string property |N| = p + 1 and extraspecial positivity") {
    for (auto [s, r] : {std::pair{'B', 3}, {'C', 3}, {'G', 2}, {'F', 4}, {'D', 4}}) {
      ChevalleyBasis cb(build_root_system(s, r));
      const auto& rs = cb.roots();
      for (size_t a = 0; a < rs.positive.size(); ++a)
        for (size_t b = a + 1; b < rs.positive.size(); ++b) {
          std::vector<int> sum(rs.rank);
          for (int i = 0; i < rs.rank; ++i) sum[i] = rs.positive[a][i] + rs.positive[b][i];
          if (!rs.is_positive_root(sum)) continue;
          long long n = cb.n_pos(static_cast<int>(a), static_cast<int>(b));
          CHECK(std::abs(n) ==
                cb.string_down(static_cast<int>(a), static_cast<int>(b)) + 1);
        }
      // extraspecial pairs are positive: the first special pair (in root
      // order) for every non-simple root
      for (size_t g = 0; g < rs.positive.size(); ++g) {
        if (rs.positive_height[g] < 2) continue;
        for (size_t a = 0; a < rs.positive.size(); ++a) {
          std::vector<int> rest(rs.rank);
          bool ok = true;
          for (int i = 0; i < rs.rank; ++i) {
            rest[i] = rs.positive[g][i] - rs.positive[a][i];
            if (rest[i] < 0) ok = false;
          }
          if (!ok) continue;
          int b = rs.root_index(rest);
          if (b < 0 || b <= static_cast<int>(a)) continue;
          CHECK(cb.n_pos(static_cast<int>(a), b) > 0);
          break;  // only the extraspecial (minimal a) pair
        }
      }
    }
  }
  SUBCASE("reconstructed algebra dimensions match the simple algebras") {
    const std::tuple<char, int, int> rows[] = {
        {'A', 2, 8}, {'B', 3, 21}, {'C', 3, 21}, {'G', 2, 14}, {'D', 4, 28}, {'F', 4, 52}};
    for (const auto& [s, r, dim] : rows) {
      RootSystem rs = build_root_system(s, r);
      CHECK(static_cast<int>(rs.rank + 2 * rs.positive.size()) == dim);
    }
  }
}

TEST_CASE("parabolic gradings reproduce the table") {
  struct Row {
    char s;
    int r;
    std::vector<int> cross;
    std::vector<int> growth;
    std::string desc;
  };
  const Row rows[] = {
      {'B', 3, {3}, {3, 3}, "gl(3)"},
      {'B', 4, {4}, {4, 6}, "gl(4)"},
      {'G', 2, {1}, {2, 1, 2}, "gl(2)"},
      {'G', 2, {2}, {4, 1}, "gl(2)"},
      {'E', 6, {2}, {20, 1}, "gl(6)"},
      {'E', 7, {2}, {35, 7}, "gl(7)"},
      {'E', 8, {2}, {56, 28, 8}, "gl(8)"},
      {'E', 8, {1}, {64, 14}, "D7 + center(1)"},
      {'E', 8, {8}, {56, 1}, "E7 + center(1)"},
  };
  for (const Row& row : rows) {
    RootSystem rs = build_root_system(row.s, row.r);
    ParabolicGrading pg = parabolic_grading(rs, row.cross);
    CHECK_MESSAGE(pg.growth == row.growth, row.s, row.r);
    CHECK_MESSAGE(pg.g0_desc == row.desc, row.s, row.r, " got ", pg.g0_desc);
    // layer dimensions sum to dim g with the mirror and the Levi part
    long long total = pg.g0_dim;
    for (int d : pg.growth) total += 2ll * d;
    CHECK(total == rs.rank + 2ll * rs.positive.size());
    if (pg.g0_is_gl) CHECK(pg.g0_dim == static_cast<long long>(pg.gl_k) * pg.gl_k);
  }
  SUBCASE("invalid node") {
    CHECK_THROWS_AS((void)parabolic_grading(build_root_system('A', 2), {5}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)parabolic_grading(build_root_system('A', 2), {}),
                    std::invalid_argument);
  }
  SUBCASE("no F4 parabolic has a gl Levi") {
    RootSystem f4 = build_root_system('F', 4);
    for (int c = 1; c <= 4; ++c) CHECK(!parabolic_grading(f4, {c}).g0_is_gl);
  }
  SUBCASE("contact gradings have a line in degree -2") {
    CHECK(parabolic_grading(build_root_system('G', 2), {2}).growth ==
          std::vector<int>{4, 1});
    CHECK(parabolic_grading(build_root_system('E', 6), {2}).growth ==
          std::vector<int>{20, 1});
  }
}

TEST_CASE("negative nilradicals") {
  SUBCASE("G2, first node: the free-like (2,1,2) algebra") {
    NilradicalResult nr = negative_nilradical(build_root_system('G', 2), {1});
    CHECK(nr.algebra.dims() == std::vector<int>{2, 1, 2});
    CHECK(!nr.abelian);
    CHECK(validate(nr.algebra.to_data()).ok());
    CHECK(is_fundamental(nr.algebra).fundamental);
  }
  SUBCASE("B3, last node: growth (3,3)") {
    NilradicalResult nr = negative_nilradical(build_root_system('B', 3), {3});
    CHECK(nr.algebra.dims() == std::vector<int>{3, 3});
    CHECK(validate(nr.algebra.to_data()).ok());
    CHECK(is_fundamental(nr.algebra).fundamental);
  }
  SUBCASE("A3, first node: abelian and flagged") {
    NilradicalResult nr = negative_nilradical(build_root_system('A', 3), {1});
    CHECK(nr.abelian);
    CHECK(nr.algebra.dims() == std::vector<int>{3});
    CHECK(!is_fundamental(nr.algebra).fundamental);
  }
  SUBCASE("all single-cross nilradicals of rank <= 4 validate") {
    for (auto [s, r] : {std::pair{'A', 3}, {'B', 3}, {'B', 4}, {'C', 3}, {'D', 4},
                        {'F', 4}, {'G', 2}}) {
      RootSystem rs = build_root_system(s, r);
      for (int c = 1; c <= rs.rank; ++c) {
        NilradicalResult nr = negative_nilradical(rs, {c});
        ValidationReport rep = validate(nr.algebra.to_data());
        CHECK_MESSAGE(rep.ok(), s, r, " p", c, ": ", rep.detail);
        if (nr.grading.depth >= 2) CHECK(is_fundamental(nr.algebra).fundamental);
      }
    }
  }
}

TEST_CASE("layer decompositions reproduce the representation column") {
  SUBCASE("B3, last node: standard then wedge") {
    ParabolicGrading pg = parabolic_grading(build_root_system('B', 3), {3});
    CHECK(layer_decomposition(pg, 1) == sum_of({{wv({1, 0}), 1}}));
    CHECK(layer_decomposition(pg, 2) == sum_of({{wv({0, 1}), 1}}));
  }
  SUBCASE("G2, first node: (G1, G0, G1)") {
    ParabolicGrading pg = parabolic_grading(build_root_system('G', 2), {1});
    CHECK(layer_decomposition(pg, 1) == sum_of({{wv({1}), 1}}));
    CHECK(layer_decomposition(pg, 2) == sum_of({{wv({0}), 1}}));
    CHECK(layer_decomposition(pg, 3) == sum_of({{wv({1}), 1}}));
  }
  SUBCASE("G2, second node: (G3, G0)") {
    ParabolicGrading pg = parabolic_grading(build_root_system('G', 2), {2});
    CHECK(layer_decomposition(pg, 1) == sum_of({{wv({3}), 1}}));
    CHECK(layer_decomposition(pg, 2) == sum_of({{wv({0}), 1}}));
  }
  SUBCASE("E6 contact: (G(p3), G0) over A5") {
    ParabolicGrading pg = parabolic_grading(build_root_system('E', 6), {2});
    CHECK(layer_decomposition(pg, 1) == sum_of({{wv({0, 0, 1, 0, 0}), 1}}));
    CHECK(layer_decomposition(pg, 2) == sum_of({{wv({0, 0, 0, 0, 0}), 1}}));
  }
  SUBCASE("E7: (G(p3), G(p6)) over A6") {
    ParabolicGrading pg = parabolic_grading(build_root_system('E', 7), {2});
    CHECK(layer_decomposition(pg, 1) == sum_of({{wv({0, 0, 1, 0, 0, 0}), 1}}));
    CHECK(layer_decomposition(pg, 2) == sum_of({{wv({0, 0, 0, 0, 0, 1}), 1}}));
  }
  SUBCASE("E8: (G(p3), G(p6), G(p1)) over A7") {
    ParabolicGrading pg = parabolic_grading(build_root_system('E', 8), {2});
    CHECK(layer_decomposition(pg, 1) == sum_of({{wv({0, 0, 1, 0, 0, 0, 0}), 1}}));
    CHECK(layer_decomposition(pg, 2) == sum_of({{wv({0, 0, 0, 0, 0, 1, 0}), 1}}));
    CHECK(layer_decomposition(pg, 3) == sum_of({{wv({1, 0, 0, 0, 0, 0, 0}), 1}}));
  }
  SUBCASE("dimensions reproduce the growth vector") {
    for (auto [s, r, c] : {std::tuple{'E', 7, 2}, {'E', 8, 1}, {'B', 4, 4}}) {
      ParabolicGrading pg = parabolic_grading(build_root_system(s, r), {c});
      std::vector<RootSystem> parts;
      for (const auto& comp : pg.levi) parts.push_back(build_root_system(comp.series, comp.rank));
      std::vector<const RootSystem*> pp;
      for (const auto& p : parts) pp.push_back(&p);
      for (int k = 1; k <= pg.depth; ++k) {
        Integer dim = 0;
        for (const auto& [w, m] : layer_decomposition(pg, k))
          dim += Integer(static_cast<long>(m)) * weyl_dim_product(pp, w);
        CHECK(dim == pg.growth[k - 1]);
      }
    }
  }
  SUBCASE("multi-cross gradings decompose over the product Levi") {
    ParabolicGrading pg = parabolic_grading(build_root_system('A', 3), {2});
    // Levi = A1 x A1; degree -1 is the (standard (x) standard) box
    IrrepSum dec = layer_decomposition(pg, 1);
    CHECK(dec == sum_of({{wv({1, 1}), 1}}));
  }
}

TEST_CASE("prolongation closes the nilradicals back to the ambient dimension") {
  SUBCASE("G2, first node: total 14") {
    NilradicalResult nr = negative_nilradical(build_root_system('G', 2), {1});
    ProlongResult pr = prolong(nr.algebra, std::nullopt, 6);
    CHECK(pr.status == ProlongStatus::StabilizedAtZero);
    CHECK(pr.layer_dims() == std::vector<int>{2, 1, 2, 0});
    CHECK(pr.total_dim() == 14);
  }
  SUBCASE("B3 and B4, last node: totals 21 and 36") {
    NilradicalResult nr3 = negative_nilradical(build_root_system('B', 3), {3});
    CHECK(prolong(nr3.algebra, std::nullopt, 5).total_dim() == 21);
    NilradicalResult nr4 = negative_nilradical(build_root_system('B', 4), {4});
    CHECK(prolong(nr4.algebra, std::nullopt, 5).total_dim() == 36);
  }
  SUBCASE("pair prolongation with the exported Levi action: G2 contact") {
    NilradicalResult nr = negative_nilradical(build_root_system('G', 2), {2});
    REQUIRE(nr.algebra.levi().has_value());
    DerivationLayer g0 = levi_derivations(*nr.algebra.levi());
    CHECK(g0.dim() == 4);
    ProlongResult pr = prolong(nr.algebra, g0, 6);
    CHECK(pr.status == ProlongStatus::StabilizedAtZero);
    CHECK(pr.layer_dims() == std::vector<int>{4, 1, 0});
    CHECK(pr.total_dim() == 14);
  }
  SUBCASE("pair prolongation: E6 contact closes to 78") {
    NilradicalResult nr = negative_nilradical(build_root_system('E', 6), {2});
    DerivationLayer g0 = levi_derivations(*nr.algebra.levi());
    CHECK(g0.dim() == 36);
    ProlongResult pr = prolong(nr.algebra, g0, 4);
    CHECK(pr.status == ProlongStatus::StabilizedAtZero);
    CHECK(pr.layer_dims() == std::vector<int>{20, 1, 0});
    CHECK(pr.total_dim() == 78);
  }
}
