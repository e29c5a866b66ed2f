#include "doctest.h"

#include "gnlat/matrix.hpp"

#include <random>

using namespace gnlat;

namespace {

RationalMatrix from_ints(const std::vector<std::vector<long>>& rows, int cols) {
  std::vector<Vec> v;
  for (const auto& r : rows) {
    Vec row;
    for (long x : r) row.push_back(rat(x));
    v.push_back(row);
  }
  return RationalMatrix::from_dense(v, cols);
}

bool is_zero_vec(const Vec& v) {
  for (const auto& q : v)
    if (!is_zero(q)) return false;
  return true;
}

// Independent rank oracle: dense fraction-free (Bareiss) elimination on
// integer matrices, no sparse machinery shared with the implementation.
int bareiss_rank(std::vector<std::vector<Integer>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 0;
  const int m = static_cast<int>(a[0].size());
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < n; ++i) {
      for (int j = c + 1; j < m; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("rref on the examples") {
  SUBCASE("2x2 identity") {
    auto r = rref(from_ints({{1, 0}, {0, 1}}, 2));
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<int>{0, 1});
    CHECK(r.matrix.get(0, 0) == rat(1));
    CHECK(r.matrix.get(1, 1) == rat(1));
    CHECK(r.matrix.get(0, 1) == rat(0));
  }
  SUBCASE("zero 3x3") {
    auto r = rref(from_ints({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 3));
    CHECK(r.rank == 0);
    CHECK(r.pivots.empty());
    CHECK(r.matrix.nnz() == 0);
  }
  SUBCASE("rank one") {
    auto r = rref(from_ints({{1, 2}, {2, 4}}, 2));
    CHECK(r.rank == 1);
    CHECK(r.matrix.get(0, 0) == rat(1));
    CHECK(r.matrix.get(0, 1) == rat(2));
    CHECK(r.matrix.row(1).empty());
  }
}

TEST_CASE("nullspace examples and conventions") {
  SUBCASE("identity has trivial nullspace") {
    CHECK(nullspace(from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3)).empty());
  }
  SUBCASE("zero 2x3 has full nullspace") {
    auto ns = nullspace(from_ints({{0, 0, 0}, {0, 0, 0}}, 3));
    REQUIRE(ns.size() == 3);
    // Canonical: unit vectors in increasing free-column order.
    for (int i = 0; i < 3; ++i) CHECK(ns[i][i] == rat(1));
  }
  SUBCASE("single relation") {
    auto m = from_ints({{1, 1, 0}}, 3);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) CHECK(is_zero_vec(m.apply(v)));
    CHECK(ns[0][1] == rat(1));  // free columns 1, 2 in order
    CHECK(ns[1][2] == rat(1));
  }
}

TEST_CASE("solve examples") {
  SUBCASE("identity") {
    Vec b{rat(3), rat(-7)};
    auto x = solve(from_ints({{1, 0}, {0, 1}}, 2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
  }
  SUBCASE("inconsistent") {
    CHECK(!solve(from_ints({{1, 2}, {2, 4}}, 2), Vec{rat(1), rat(3)}).has_value());
  }
  SUBCASE("zero matrix, zero rhs") {
    auto x = solve(from_ints({{0, 0}, {0, 0}}, 2), Vec{rat(0), rat(0)});
    REQUIRE(x.has_value());
    CHECK(is_zero_vec(*x));
  }
  SUBCASE("rhs length checked") {
    CHECK_THROWS_AS((void)solve(from_ints({{1, 0}}, 2), Vec{rat(1), rat(2)}),
                    std::invalid_argument);
  }
}

TEST_CASE("randomized properties against the Bareiss oracle") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> dim(1, 7), val(-4, 4);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = dim(rng), m = dim(rng);
    std::vector<std::vector<long>> rows(n, std::vector<long>(m));
    std::vector<std::vector<Integer>> zrows(n, std::vector<Integer>(m));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        rows[i][j] = val(rng);
        zrows[i][j] = rows[i][j];
      }
    RationalMatrix mat = from_ints(rows, m);
    RrefResult r = rref(mat);

    CHECK(r.rank == bareiss_rank(zrows));

    // Idempotence of the reduced form.
    RrefResult r2 = rref(r.matrix);
    CHECK(r2.rank == r.rank);
    for (int i = 0; i < r.rank; ++i) CHECK(r2.matrix.row(i) == r.matrix.row(i));

    // rank + nullity = cols, and every basis vector is an exact solution.
    auto ns = nullspace(mat);
    CHECK(static_cast<int>(ns.size()) + r.rank == m);
    for (const auto& v : ns) CHECK(is_zero_vec(mat.apply(v)));

    // solve() returns an exact solution whenever it claims one.
    Vec b(n);
    for (int i = 0; i < n; ++i) b[i] = rat(val(rng));
    if (auto x = solve(mat, b)) {
      Vec mx = mat.apply(*x);
      CHECK(mx == b);
    }
  }
}

TEST_CASE("row space reduction") {
  auto m = from_ints({{1, 2, 0}, {0, 0, 3}}, 3);
  RowSpace rs(m);
  CHECK(rs.dim() == 2);
  CHECK(rs.contains(Vec{rat(2), rat(4), rat(-3)}));
  CHECK(!rs.contains(Vec{rat(0), rat(1), rat(0)}));
  Vec red = rs.reduce(Vec{rat(1), rat(5), rat(7)});
  CHECK(red[0] == rat(0));
  CHECK(red[2] == rat(0));
  CHECK(red[1] == rat(3));
}

TEST_CASE("builder accumulates duplicates") {
  MatrixBuilder b(2, 2);
  b.add(0, 0, rat(1));
  b.add(0, 0, rat(-1));
  b.add(1, 1, rat(1, 2));
  b.add(1, 1, rat(1, 2));
  RationalMatrix m = b.build();
  CHECK(m.get(0, 0) == rat(0));
  CHECK(m.get(1, 1) == rat(1));
  CHECK(m.nnz() == 1);
}
