#pragma once

// Independent first-prolongation oracle: dense assembly of the degree-1
// Leibniz system over all map tuples, eliminated by a from-scratch
// Gauss-Jordan. Shared by the unit tests and the acceptance suite.

#include "gnlat/prolong.hpp"

namespace gnlat::oracle {

inline std::vector<Vec> dense_nullspace(std::vector<Vec> a, int cols) {
  std::vector<int> pivots;
  int prow = 0;
  for (int c = 0; c < cols && prow < static_cast<int>(a.size()); ++c) {
    int sel = -1;
    for (int r = prow; r < static_cast<int>(a.size()); ++r)
      if (!is_zero(a[r][c])) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[prow], a[sel]);
    Rational inv = a[prow][c];
    for (int j = 0; j < cols; ++j) a[prow][j] /= inv;
    for (int r = 0; r < static_cast<int>(a.size()); ++r) {
      if (r == prow || is_zero(a[r][c])) continue;
      Rational f = a[r][c];
      for (int j = 0; j < cols; ++j) a[r][j] -= f * a[prow][j];
    }
    pivots.push_back(c);
    ++prow;
  }
  std::vector<bool> is_piv(cols, false);
  for (int p : pivots) is_piv[p] = true;
  std::vector<Vec> basis;
  for (int fcol = 0; fcol < cols; ++fcol) {
    if (is_piv[fcol]) continue;
    Vec v(cols, Rational(0));
    v[fcol] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][fcol];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<Vec> first_layer(const Gnla& m, const DerivationLayer& g0) {
  const int s = m.depth();
  std::vector<int> tdim(s + 1);
  tdim[1] = g0.dim();
  for (int j = 2; j <= s; ++j) tdim[j] = m.layer_dim(j - 1);
  std::vector<int> uoff{0, 0};
  for (int j = 1; j <= s; ++j) uoff.push_back(uoff[j] + tdim[j] * m.layer_dim(j));
  auto idx = [&](int j, int w, int b) { return uoff[j] + w * m.layer_dim(j) + b; };
  const int unknowns = uoff[s + 1];

  auto bracket_w = [&](int i, int w, int j, int b) -> Vec {
    if (i == 1) {
      Vec out(m.layer_dim(j), Rational(0));
      for (int r = 0; r < m.layer_dim(j); ++r) out[r] = g0.basis[w].layer[j - 1][r][b];
      return out;
    }
    Vec ew(m.layer_dim(i - 1), Rational(0));
    ew[w] = 1;
    Vec eb(m.layer_dim(j), Rational(0));
    eb[b] = 1;
    return m.bracket(i - 1, ew, j, eb);
  };

  std::vector<Vec> rows;
  for (int i = 1; i <= s; ++i)
    for (int j = i; j <= s; ++j)
      for (int a = 0; a < m.layer_dim(i); ++a)
        for (int b = (i == j ? a + 1 : 0); b < m.layer_dim(j); ++b) {
          const int dtau = m.layer_dim(i + j - 1);
          if (dtau == 0) continue;
          std::vector<Vec> eq(dtau, Vec(unknowns, Rational(0)));
          if (i + j <= s) {
            Vec br = m.bracket_basis(i, a, j, b);
            for (int c = 0; c < m.layer_dim(i + j); ++c)
              if (!is_zero(br[c]))
                for (int f = 0; f < dtau; ++f) eq[f][idx(i + j, f, c)] += br[c];
          }
          for (int w = 0; w < tdim[i]; ++w) {
            Vec val = bracket_w(i, w, j, b);
            for (int f = 0; f < dtau; ++f)
              if (!is_zero(val[f])) eq[f][idx(i, w, a)] -= val[f];
          }
          for (int w = 0; w < tdim[j]; ++w) {
            Vec val = bracket_w(j, w, i, a);
            for (int f = 0; f < dtau; ++f)
              if (!is_zero(val[f])) eq[f][idx(j, w, b)] += val[f];
          }
          for (auto& e : eq) rows.push_back(std::move(e));
        }
  return dense_nullspace(std::move(rows), unknowns);
}

inline Vec flatten_tuple(const MapTuple& t) {
  Vec out;
  for (const auto& mat : t.u)
    for (const auto& row : mat)
      for (const auto& q : row) out.push_back(q);
  return out;
}

}  // namespace gnlat::oracle
