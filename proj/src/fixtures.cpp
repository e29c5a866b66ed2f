#include "gnlat/fixtures.hpp"

#include <array>
#include <map>

namespace gnlat {

Gnla heisenberg3() {
  return GnlaBuilder("heis3", {2, 1}).br(1, 1, 1, 2, {{1, rat(1)}}).build();
}

Gnla abelian(int n) {
  return GnlaBuilder("abelian" + std::to_string(n), {n}).build();
}

namespace {

GnlaBuilder m4_relations(std::string name, std::vector<int> dims) {
  GnlaBuilder b(std::move(name), std::move(dims));
  b.br(1, 1, 1, 2, {{1, rat(1)}});   // [e1_1, e1_2] = e2
  b.br(1, 1, 2, 1, {{1, rat(1)}});   // [e1_1, e2] = e3_1
  b.br(1, 2, 2, 1, {{2, rat(1)}});   // [e1_2, e2] = e3_2
  b.br(1, 1, 3, 1, {{1, rat(1)}});   // [e1_1, e3_1] = e4_11
  b.br(1, 1, 3, 2, {{2, rat(1)}});   // [e1_1, e3_2] = e4_12
  b.br(1, 2, 3, 1, {{2, rat(1)}});   // [e1_2, e3_1] = e4_12
  b.br(1, 2, 3, 2, {{3, rat(1)}});   // [e1_2, e3_2] = e4_22
  return b;
}

}  // namespace

Gnla fixture_m4() { return m4_relations("m4", {2, 1, 2, 3}).build(); }

Gnla fixture_m5_prime() {
  GnlaBuilder b = m4_relations("m5prime", {2, 1, 2, 3, 2});
  b.br(1, 1, 4, 2, {{1, rat(2, 3)}});    // [e1_1, e4_12] = 2/3 e5_1
  b.br(1, 1, 4, 3, {{2, rat(4, 3)}});    // [e1_1, e4_22] = 4/3 e5_2
  b.br(1, 2, 4, 1, {{1, rat(-4, 3)}});   // [e1_2, e4_11] = -4/3 e5_1
  b.br(1, 2, 4, 2, {{2, rat(-2, 3)}});   // [e1_2, e4_12] = -2/3 e5_2
  b.br(2, 1, 3, 1, {{1, rat(2)}});       // [e2, e3_1] = 2 e5_1
  b.br(2, 1, 3, 2, {{2, rat(2)}});       // [e2, e3_2] = 2 e5_2
  return b.build();
}

Gnla fixture_m5_dprime() {
  GnlaBuilder b = m4_relations("m5dprime", {2, 1, 2, 3, 4});
  b.br(1, 1, 4, 1, {{1, rat(1)}});  // [e1_1, e4_11] = e5_111
  b.br(1, 1, 4, 2, {{2, rat(1)}});  // [e1_1, e4_12] = e5_112
  b.br(1, 2, 4, 1, {{2, rat(1)}});  // [e1_2, e4_11] = e5_112
  b.br(1, 1, 4, 3, {{3, rat(1)}});  // [e1_1, e4_22] = e5_122
  b.br(1, 2, 4, 2, {{3, rat(1)}});  // [e1_2, e4_12] = e5_122
  b.br(1, 2, 4, 3, {{4, rat(1)}});  // [e1_2, e4_22] = e5_222
  return b.build();
}

Gnla fixture_m4_prime() {
  // Basis: e1_i; e2_[jk] for jk in 12,13,23; e3_(i;jk) with (3;12) dropped
  // via the cyclic relation e3_(1;23) - e3_(2;13) + e3_(3;12) = 0; e4_k.
  const std::array<std::pair<int, int>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
  auto eps = [](int i, int j, int k) -> int {
    return (j - i) * (k - i) * (k - j) / 2;  // Levi-Civita on {1,2,3}
  };
  auto e2pos = [&](int j, int k) {
    for (int p = 0; p < 3; ++p)
      if (pairs[p] == std::make_pair(j, k)) return p + 1;
    throw std::logic_error("bad pair");
  };

  std::map<std::pair<int, int>, int> e3pos;  // (i, pair index) -> 1-based position
  {
    int pos = 1;
    for (int i = 1; i <= 3; ++i)
      for (int p = 0; p < 3; ++p) {
        if (i == 3 && p == 0) continue;  // dropped coordinate
        e3pos[{i, p}] = pos++;
      }
  }
  // e3_(i;jk) for arbitrary j, k as a coordinate list in the 8-basis.
  auto e3coord = [&](int i, int j, int k) {
    std::vector<std::pair<int, Rational>> out;
    if (j == k) return out;
    int sign = 1;
    if (j > k) {
      std::swap(j, k);
      sign = -1;
    }
    int p = e2pos(j, k) - 1;
    if (i == 3 && p == 0) {
      out.push_back({e3pos.at({1, 2}), rat(-sign)});  // -e3_(1;23)
      out.push_back({e3pos.at({2, 1}), rat(sign)});   // +e3_(2;13)
    } else {
      out.push_back({e3pos.at({i, p}), rat(sign)});
    }
    return out;
  };

  GnlaBuilder b("m4prime", {3, 3, 8, 3});
  b.comment(
      "g(-3) coordinates are e3_(i;jk), jk in {12,13,23}, with e3_(3;12) "
      "eliminated by the cyclic relation e3_(1;23) - e3_(2;13) + e3_(3;12) = 0. "
      "The degree -4 brackets are the unique gl(3)-equivariant choice in this "
      "basis ([e1_l,e3_(i;jk)] = 3/4 eps(l,j,k) e4_i - 1/4 eps(i,j,k) e4_l), "
      "matching the reduction of the free algebra by its 15-dimensional "
      "top-layer component.");

  // [e1_i, e1_j] = e2_[ij]
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) b.br(1, i, 1, j, {{e2pos(i, j), rat(1)}});

  // [e1_i, e2_[jk]] = e3_(i;jk)
  for (int i = 1; i <= 3; ++i)
    for (int p = 0; p < 3; ++p)
      b.br(1, i, 2, p + 1, e3coord(i, pairs[p].first, pairs[p].second));

  // [e1_l, e3_(i;jk)] = 3/4 eps(l,j,k) e4_i - 1/4 eps(i,j,k) e4_l
  for (int l = 1; l <= 3; ++l)
    for (const auto& [ip, pos] : e3pos) {
      const int i = ip.first;
      const auto [j, k] = pairs[ip.second];
      std::map<int, Rational> coef;
      if (eps(l, j, k)) coef[i] += rat(3 * eps(l, j, k), 4);
      if (eps(i, j, k)) coef[l] -= rat(eps(i, j, k), 4);
      std::vector<std::pair<int, Rational>> terms;
      for (const auto& [c, v] : coef)
        if (!is_zero(v)) terms.push_back({c, v});
      if (!terms.empty()) b.br(1, l, 3, pos, terms);
    }

  // [e2_[ij], e2_[kl]] = eps(i,k,l) e4_j - eps(j,k,l) e4_i
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q) {
      const auto [i, j] = pairs[p];
      const auto [k, l] = pairs[q];
      std::map<int, Rational> coef;
      if (eps(i, k, l)) coef[j] += rat(eps(i, k, l));
      if (eps(j, k, l)) coef[i] -= rat(eps(j, k, l));
      std::vector<std::pair<int, Rational>> terms;
      for (const auto& [c, v] : coef)
        if (!is_zero(v)) terms.push_back({c, v});
      if (!terms.empty()) b.br(2, p + 1, 2, q + 1, terms);
    }

  return b.build();
}

}  // namespace gnlat
