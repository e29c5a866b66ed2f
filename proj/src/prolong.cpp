#include "gnlat/prolong.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace gnlat {

namespace {

std::vector<int> derivation_offsets(const Gnla& m) {
  std::vector<int> off{0};
  for (int k = 1; k <= m.depth(); ++k)
    off.push_back(off.back() + m.layer_dim(k) * m.layer_dim(k));
  return off;
}

Vec flatten(const Gnla& m, const Derivation& d) {
  Vec out;
  for (int k = 1; k <= m.depth(); ++k)
    for (int r = 0; r < m.layer_dim(k); ++r)
      for (int c = 0; c < m.layer_dim(k); ++c) out.push_back(d.layer[k - 1][r][c]);
  return out;
}

Derivation unflatten(const Gnla& m, const Vec& v) {
  Derivation d;
  size_t pos = 0;
  for (int k = 1; k <= m.depth(); ++k) {
    const int dk = m.layer_dim(k);
    d.layer.push_back(dense_zero(dk, dk));
    for (int r = 0; r < dk; ++r)
      for (int c = 0; c < dk; ++c) d.layer[k - 1][r][c] = v[pos++];
  }
  return d;
}

// Leibniz constraint matrix for grading-preserving derivations: unknowns
// are the entries of (D_1, ..., D_s) in row-major layer order; one block
// of equations per canonical basis pair with i + j <= s.
RationalMatrix der0_system(const Gnla& m) {
  const int s = m.depth();
  const std::vector<int> off = derivation_offsets(m);
  auto idx = [&](int k, int r, int c) { return off[k - 1] + r * m.layer_dim(k) + c; };

  long long rows = 0;
  for (int i = 1; i <= s; ++i)
    for (int j = i; i + j <= s; ++j) {
      long long pairs = i == j ? static_cast<long long>(m.layer_dim(i)) *
                                     (m.layer_dim(i) - 1) / 2
                               : static_cast<long long>(m.layer_dim(i)) * m.layer_dim(j);
      rows += pairs * m.layer_dim(i + j);
    }

  RationalMatrix sys(static_cast<int>(rows), off[s]);
  long long row0 = 0;
  for (int i = 1; i <= s; ++i) {
    for (int j = i; i + j <= s; ++j) {
      for (int a = 0; a < m.layer_dim(i); ++a) {
        for (int b = (i == j ? a + 1 : 0); b < m.layer_dim(j); ++b) {
          const int target = i + j;
          std::vector<std::map<int, Rational>> eq(m.layer_dim(target));
          int sign = 1;
          // D_{i+j}([x,y]) term
          if (const SparseRow* br = m.bracket_sparse(i, a, j, b, sign))
            for (const auto& [c, v] : *br) {
              Rational coef = sign > 0 ? v : -v;
              for (int f = 0; f < m.layer_dim(target); ++f)
                eq[f][idx(target, f, c)] += coef;
            }
          // -[D x, y]: D_i column a
          for (int ap = 0; ap < m.layer_dim(i); ++ap) {
            int s2 = 1;
            if (const SparseRow* br = m.bracket_sparse(i, ap, j, b, s2))
              for (const auto& [f, v] : *br)
                eq[f][idx(i, ap, a)] -= s2 > 0 ? v : -v;
          }
          // -[x, D y]: D_j column b
          for (int bp = 0; bp < m.layer_dim(j); ++bp) {
            int s2 = 1;
            if (const SparseRow* br = m.bracket_sparse(i, a, j, bp, s2))
              for (const auto& [f, v] : *br)
                eq[f][idx(j, bp, b)] -= s2 > 0 ? v : -v;
          }
          for (int f = 0; f < m.layer_dim(target); ++f) {
            SparseRow& out = sys.row(static_cast<int>(row0 + f));
            for (const auto& [col, val] : eq[f])
              if (!is_zero(val)) out.push_back({col, val});
          }
          row0 += m.layer_dim(target);
        }
      }
    }
  }
  return sys;
}

}  // namespace

DerivationLayer der0(const Gnla& m) {
  DerivationLayer out;
  for (const Vec& v : nullspace(der0_system(m))) out.basis.push_back(unflatten(m, v));
  return out;
}

Derivation grading_element(const Gnla& m) {
  Derivation d;
  for (int k = 1; k <= m.depth(); ++k) {
    d.layer.push_back(dense_zero(m.layer_dim(k), m.layer_dim(k)));
    for (int r = 0; r < m.layer_dim(k); ++r) d.layer[k - 1][r][r] = rat(k);
  }
  return d;
}

bool satisfies_leibniz(const Gnla& m, const Derivation& d) {
  const int s = m.depth();
  for (int i = 1; i <= s; ++i)
    for (int j = i; i + j <= s; ++j)
      for (int a = 0; a < m.layer_dim(i); ++a)
        for (int b = (i == j ? a + 1 : 0); b < m.layer_dim(j); ++b) {
          Vec lhs(m.layer_dim(i + j), Rational(0));
          Vec br = m.bracket_basis(i, a, j, b);
          for (int c = 0; c < m.layer_dim(i + j); ++c) {
            if (is_zero(br[c])) continue;
            for (int f = 0; f < m.layer_dim(i + j); ++f)
              lhs[f] += d.layer[i + j - 1][f][c] * br[c];
          }
          Vec dx(m.layer_dim(i), Rational(0)), dy(m.layer_dim(j), Rational(0));
          for (int t = 0; t < m.layer_dim(i); ++t) dx[t] = d.layer[i - 1][t][a];
          for (int t = 0; t < m.layer_dim(j); ++t) dy[t] = d.layer[j - 1][t][b];
          Vec ea(m.layer_dim(i), Rational(0)), eb(m.layer_dim(j), Rational(0));
          ea[a] = 1;
          eb[b] = 1;
          Vec r1 = m.bracket(i, dx, j, eb);
          Vec r2 = m.bracket(i, ea, j, dy);
          for (int f = 0; f < m.layer_dim(i + j); ++f)
            if (lhs[f] != r1[f] + r2[f]) return false;
        }
  return true;
}

bool derivation_in_span(const DerivationLayer& l, const Derivation& d) {
  if (l.basis.empty()) return false;
  // Determine m's shape from the derivation itself.
  std::vector<Vec> rows;
  auto flat = [](const Derivation& dd) {
    Vec v;
    for (const auto& mat : dd.layer)
      for (const auto& r : mat)
        for (const auto& q : r) v.push_back(q);
    return v;
  };
  for (const auto& b : l.basis) rows.push_back(flat(b));
  RowSpace space(RationalMatrix::from_dense(rows, static_cast<int>(rows[0].size())));
  return space.contains(flat(d));
}

Derivation commutator(const Derivation& a, const Derivation& b) {
  Derivation out;
  for (size_t k = 0; k < a.layer.size(); ++k)
    out.layer.push_back(dense_sub(dense_mul(a.layer[k], b.layer[k]),
                                  dense_mul(b.layer[k], a.layer[k])));
  return out;
}

SubfreeReport is_subfree(const Gnla& m) {
  SubfreeReport rep;
  rep.n = m.layer_dim(1);
  FundamentalReport f = is_fundamental(m);
  if (!f.fundamental) {
    rep.reason = "not fundamental: " + f.reason;
    rep.der0_dim = der0(m).dim();
    return rep;
  }
  rep.der0_dim = der0(m).dim();
  rep.subfree = rep.der0_dim == rep.n * rep.n;
  rep.reason = rep.subfree ? "der0 has dimension n^2"
                           : "der0 has dimension " + std::to_string(rep.der0_dim) +
                                 ", expected " + std::to_string(rep.n * rep.n);
  return rep;
}

namespace {

// Computation context for one prolongation run.
struct ProlongCtx {
  const Gnla& m;
  const DerivationLayer& g0;
  std::vector<ProlongationLayer> layers;  // degrees 1..k-1

  // Dimension of the degree-t space.
  int dim(int t) const {
    if (t < 0) return m.layer_dim(-t);
    if (t == 0) return g0.dim();
    if (t <= static_cast<int>(layers.size())) return layers[t - 1].dim();
    return 0;
  }

  // [w, e_{j,b}] for the degree-t basis element w; dense in degree t - j.
  Vec eval_bracket(int t, int w, int j, int b) const {
    if (t < 0) {
      Vec e(m.layer_dim(-t), Rational(0));
      e[w] = 1;
      Vec y(m.layer_dim(j), Rational(0));
      y[b] = 1;
      return m.bracket(-t, e, j, y);
    }
    if (t == 0) {
      const DenseMat& mat = g0.basis[w].layer[j - 1];
      Vec out(m.layer_dim(j), Rational(0));
      for (int r = 0; r < m.layer_dim(j); ++r) out[r] = mat[r][b];
      return out;
    }
    const DenseMat& mat = layers[t - 1].basis[w].u[j - 1];
    Vec out(dim(t - j), Rational(0));
    for (size_t r = 0; r < out.size(); ++r) out[r] = mat[r][b];
    return out;
  }
};

}  // namespace

ProlongResult prolong(const Gnla& m, const std::optional<DerivationLayer>& g0_opt,
                      int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  FundamentalReport f = is_fundamental(m);
  if (!f.fundamental)
    throw GnlaError("prolongation requires a fundamental algebra: " + f.reason);

  DerivationLayer g0 = g0_opt ? *g0_opt : der0(m);
  if (g0_opt) {
    for (const Derivation& d : g0.basis) {
      if (static_cast<int>(d.layer.size()) != m.depth())
        throw std::invalid_argument("g0 derivation has wrong shape");
      if (!satisfies_leibniz(m, d))
        throw std::invalid_argument("supplied g0 contains a non-derivation");
    }
    for (int i = 0; i < g0.dim(); ++i)
      for (int j = i + 1; j < g0.dim(); ++j)
        if (!derivation_in_span(g0, commutator(g0.basis[i], g0.basis[j])))
          throw std::invalid_argument("supplied g0 is not closed under commutator");
  }

  ProlongResult res;
  res.m_dims = m.dims();
  res.g0_dim = g0.dim();
  res.g0_full = !g0_opt.has_value();

  ProlongCtx ctx{m, g0, {}};
  const int s = m.depth();

  for (int k = 1; k <= max_degree; ++k) {
    // Unknown layout: u_j is dim(k-j) x d_j, j = 1..s.
    std::vector<int> uoff{0};
    for (int j = 1; j <= s; ++j) uoff.push_back(uoff.back() + ctx.dim(k - j) * m.layer_dim(j));
    auto idx = [&](int j, int w, int b) { return uoff[j - 1] + w * m.layer_dim(j) + b; };
    const int unknowns = uoff[s];

    // Equations over canonical basis pairs of m.
    std::vector<SparseRow> rows;
    for (int i = 1; i <= s; ++i) {
      for (int j = i; j <= s; ++j) {
        const int tau = k - i - j;
        const int dtau = ctx.dim(tau);
        if (dtau == 0) continue;
        for (int a = 0; a < m.layer_dim(i); ++a) {
          for (int b = (i == j ? a + 1 : 0); b < m.layer_dim(j); ++b) {
            std::vector<std::map<int, Rational>> eq(dtau);
            // u([x,y])
            if (i + j <= s) {
              int sign = 1;
              if (const SparseRow* br = m.bracket_sparse(i, a, j, b, sign))
                for (const auto& [c, v] : *br) {
                  Rational coef = sign > 0 ? v : -v;
                  for (int fcoord = 0; fcoord < dtau; ++fcoord)
                    eq[fcoord][idx(i + j, fcoord, c)] += coef;
                }
            }
            // -[u_i(x), y] = -sum_w u_i[w][a] [w, y]
            for (int w = 0; w < ctx.dim(k - i); ++w) {
              Vec val = ctx.eval_bracket(k - i, w, j, b);
              for (int fcoord = 0; fcoord < dtau; ++fcoord)
                if (!is_zero(val[fcoord])) eq[fcoord][idx(i, w, a)] -= val[fcoord];
            }
            // -[x, u_j(y)] = +sum_w u_j[w][b] [w, x]
            for (int w = 0; w < ctx.dim(k - j); ++w) {
              Vec val = ctx.eval_bracket(k - j, w, i, a);
              for (int fcoord = 0; fcoord < dtau; ++fcoord)
                if (!is_zero(val[fcoord])) eq[fcoord][idx(j, w, b)] += val[fcoord];
            }
            for (int fcoord = 0; fcoord < dtau; ++fcoord) {
              SparseRow row;
              for (const auto& [col, v] : eq[fcoord])
                if (!is_zero(v)) row.push_back({col, v});
              if (!row.empty()) rows.push_back(std::move(row));
            }
          }
        }
      }
    }

    RationalMatrix sys(static_cast<int>(rows.size()), unknowns);
    for (size_t r = 0; r < rows.size(); ++r) sys.row(static_cast<int>(r)) = std::move(rows[r]);
    std::vector<Vec> basis = nullspace(sys);

    ProlongationLayer layer;
    layer.degree = k;
    for (const Vec& v : basis) {
      MapTuple t;
      for (int j = 1; j <= s; ++j) {
        DenseMat mat = dense_zero(ctx.dim(k - j), m.layer_dim(j));
        for (int w = 0; w < ctx.dim(k - j); ++w)
          for (int b = 0; b < m.layer_dim(j); ++b) mat[w][b] = v[idx(j, w, b)];
        t.u.push_back(std::move(mat));
      }
      layer.basis.push_back(std::move(t));
    }
    const bool vanished = layer.basis.empty();
    ctx.layers.push_back(layer);
    res.layers.push_back(std::move(layer));
    if (vanished) {
      res.status = ProlongStatus::StabilizedAtZero;
      res.stabilized_at = k;
      break;
    }
  }
  return res;
}

DerivationLayer h0_ideal(const Gnla& m, const DerivationLayer& g0) {
  if (g0.dim() == 0) return {};
  // Coefficient vectors t with sum_c t_c D^(c) vanishing on layers >= 2.
  long long rows = 0;
  for (int k = 2; k <= m.depth(); ++k)
    rows += static_cast<long long>(m.layer_dim(k)) * m.layer_dim(k);
  MatrixBuilder mb(static_cast<int>(rows), g0.dim());
  long long row0 = 0;
  for (int k = 2; k <= m.depth(); ++k) {
    const int dk = m.layer_dim(k);
    for (int r = 0; r < dk; ++r)
      for (int c = 0; c < dk; ++c) {
        for (int g = 0; g < g0.dim(); ++g) {
          const Rational& v = g0.basis[g].layer[k - 1][r][c];
          if (!is_zero(v)) mb.add(static_cast<int>(row0), g, v);
        }
        ++row0;
      }
  }
  DerivationLayer out;
  for (const Vec& t : nullspace(mb.build())) {
    Derivation d;
    for (int k = 1; k <= m.depth(); ++k) {
      DenseMat mat = dense_zero(m.layer_dim(k), m.layer_dim(k));
      for (int g = 0; g < g0.dim(); ++g) {
        if (is_zero(t[g])) continue;
        for (int r = 0; r < m.layer_dim(k); ++r)
          for (int c = 0; c < m.layer_dim(k); ++c)
            mat[r][c] += t[g] * g0.basis[g].layer[k - 1][r][c];
      }
      d.layer.push_back(std::move(mat));
    }
    out.basis.push_back(std::move(d));
  }
  return out;
}

RationalMatrix adjoint_matrix(const Gnla& m, const Vec& x) {
  const int n = m.total_dim();
  MatrixBuilder mb(n, n);
  for (int j = 1; j + 1 <= m.depth(); ++j) {
    for (int b = 0; b < m.layer_dim(j); ++b) {
      Vec y(m.layer_dim(j), Rational(0));
      y[b] = 1;
      Vec img = m.bracket(1, x, j, y);
      for (int c = 0; c < m.layer_dim(j + 1); ++c)
        if (!is_zero(img[c])) mb.add(m.flat_index(j + 1, c), m.flat_index(j, b), img[c]);
    }
  }
  return mb.build();
}

namespace {

// ---- binary quadratic form machinery for the rank analysis at n = 2 ----

// A binary form of degree d: coeffs[i] multiplies x^i y^(d-i).
using BForm = std::vector<Rational>;

bool form_zero(const BForm& f) {
  for (const auto& c : f)
    if (!is_zero(c)) return false;
  return true;
}

// gcd state: common x-power, common y-power, and a univariate gcd with
// nonzero ends (coefficients low to high).
struct FormGcd {
  bool all_zero = true;
  int xpow = 1 << 20, ypow = 1 << 20;
  std::vector<Rational> uni;  // empty means "gcd 1 so far" is false: uni empty = not started
  bool started = false;
};

std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
    if (a.size() < b.size()) break;
    Rational q = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    while (!a.empty() && is_zero(a.back())) a.pop_back();
  }
  return a;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  while (!a.empty() && is_zero(a.back())) a.pop_back();
  while (!b.empty() && is_zero(b.back())) b.pop_back();
  while (!b.empty()) {
    a = poly_mod(std::move(a), b);
    std::swap(a, b);
    while (!b.empty() && is_zero(b.back())) b.pop_back();
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

void gcd_absorb(FormGcd& g, const BForm& f) {
  if (form_zero(f)) return;
  g.all_zero = false;
  int lo = 0;
  while (is_zero(f[lo])) ++lo;
  int hi = static_cast<int>(f.size()) - 1;
  while (is_zero(f[hi])) --hi;
  g.xpow = std::min(g.xpow, lo);
  g.ypow = std::min(g.ypow, static_cast<int>(f.size()) - 1 - hi);
  std::vector<Rational> uni(f.begin() + lo, f.begin() + hi + 1);
  if (!g.started) {
    g.uni = uni;
    Rational lead = g.uni.back();
    for (auto& c : g.uni) c /= lead;
    g.started = true;
  } else {
    g.uni = poly_gcd(g.uni, uni);
  }
}

// Rational roots (x:y) of the gcd; also reports whether any projective
// root exists over C.
struct RootScan {
  bool any_root = false;
  std::vector<std::pair<Rational, Rational>> rational;  // (x, y) representatives
};

RootScan scan_roots(const FormGcd& g) {
  RootScan out;
  if (g.all_zero) {
    out.any_root = true;  // everything vanishes
    return out;
  }
  if (g.xpow > 0) {
    out.any_root = true;
    out.rational.push_back({Rational(0), Rational(1)});
  }
  if (g.ypow > 0) {
    out.any_root = true;
    out.rational.push_back({Rational(1), Rational(0)});
  }
  const auto& u = g.uni;
  const int deg = static_cast<int>(u.size()) - 1;
  if (deg >= 1) out.any_root = true;  // complex roots always exist
  if (deg == 1) {
    out.rational.push_back({-u[0] / u[1], Rational(1)});
  } else if (deg == 2) {
    // monic after normalization: t^2 + pt + q
    Rational p = u[1] / u[2], q = u[0] / u[2];
    Rational disc = p * p - 4 * q;
    if (sgn(disc) >= 0) {
      // rational square test
      Integer num = disc.get_num(), den = disc.get_den();
      Integer rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      if (rn * rn == num && rd * rd == den) {
        Rational root(rn, rd);
        root.canonicalize();
        out.rational.push_back({(-p + root) / 2, Rational(1)});
        out.rational.push_back({(-p - root) / 2, Rational(1)});
      }
    }
  }
  return out;
}

int exact_rank(const RationalMatrix& m) { return rank(m); }

}  // namespace

RankOneReport rank_one_analysis(const Gnla& m, const std::optional<DerivationLayer>& g0,
                                const ProlongResult* prior) {
  RankOneReport rep;
  FundamentalReport f = is_fundamental(m);
  if (!f.fundamental) throw GnlaError("rank-one analysis requires a fundamental algebra");
  const int n = m.layer_dim(1);

  if (prior && prior->status == ProlongStatus::StabilizedAtZero) {
    rep.verdict = RankOneReport::Verdict::FiniteType;
    rep.method = "prolongation vanished";
    return rep;
  }

  if (g0) {
    DerivationLayer h0 = h0_ideal(m, *g0);
    if (h0.dim() == 0) {
      rep.verdict = RankOneReport::Verdict::FiniteType;
      rep.method = "h0 ideal is zero";
      return rep;
    }
    if (n == 2) {
      // Restrictions to degree -1 are independent 2x2 matrices; rank-one
      // existence over C is the solvability of det = 0 on the span.
      const int d = h0.dim();
      if (d >= 2) {
        rep.verdict = RankOneReport::Verdict::InfiniteType;
        rep.method = "h0 determinant quadric has complex zeros";
        rep.witness_note = "h0 restriction span of dimension " + std::to_string(d) +
                           " in gl(2) always meets the rank-one locus over C";
        return rep;
      }
      const DenseMat& a = h0.basis[0].layer[0];
      Rational det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
      if (is_zero(det)) {
        rep.verdict = RankOneReport::Verdict::InfiniteType;
        rep.method = "singular h0 element";
        rep.witness_note = "the h0 generator restricted to degree -1 has rank one";
      } else {
        rep.verdict = RankOneReport::Verdict::FiniteType;
        rep.method = "h0 has no rank-one elements";
      }
      return rep;
    }
    // n > 2: search small combinations for a rank-one restriction.
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 400; ++trial) {
      DenseMat acc = dense_zero(n, n);
      bool nonzero = false;
      for (int g = 0; g < h0.dim(); ++g) {
        int c = coef(rng);
        if (!c) continue;
        nonzero = true;
        for (int r = 0; r < n; ++r)
          for (int cc = 0; cc < n; ++cc) acc[r][cc] += rat(c) * h0.basis[g].layer[0][r][cc];
      }
      if (!nonzero) continue;
      if (dense_rank(acc) == 1) {
        rep.verdict = RankOneReport::Verdict::InfiniteType;
        rep.method = "rank-one element found in h0";
        return rep;
      }
    }
    rep.method = "h0 nonzero; rank-one existence undecided";
    return rep;
  }

  // Full prolongation: the rank-one adjoint criterion.
  if (n == 2) {
    // All 2x2 minors of ad_x are binary quadratics in the coordinates of x.
    const int dim = m.total_dim();
    RationalMatrix ad1 = adjoint_matrix(m, Vec{rat(1), rat(0)});
    RationalMatrix ad2 = adjoint_matrix(m, Vec{rat(0), rat(1)});
    // dense copies
    std::vector<Vec> m1(dim), m2(dim);
    for (int r = 0; r < dim; ++r) {
      m1[r] = ad1.row_dense(r);
      m2[r] = ad2.row_dense(r);
    }
    FormGcd g;
    for (int r1 = 0; r1 < dim; ++r1)
      for (int r2 = r1 + 1; r2 < dim; ++r2)
        for (int c1 = 0; c1 < dim; ++c1)
          for (int c2 = c1 + 1; c2 < dim; ++c2) {
            // det of the 2x2 block as a form in (x1, x2)
            // entry(r,c) = m1[r][c] x1 + m2[r][c] x2
            const Rational &a1 = m1[r1][c1], &a2 = m2[r1][c1];
            const Rational &b1 = m1[r1][c2], &b2 = m2[r1][c2];
            const Rational &c1v = m1[r2][c1], &c2v = m2[r2][c1];
            const Rational &d1 = m1[r2][c2], &d2 = m2[r2][c2];
            BForm fform(3, Rational(0));
            fform[2] = a1 * d1 - b1 * c1v;                          // x^2
            fform[1] = a1 * d2 + a2 * d1 - b1 * c2v - b2 * c1v;     // xy
            fform[0] = a2 * d2 - b2 * c2v;                          // y^2
            gcd_absorb(g, fform);
          }
    RootScan roots = scan_roots(g);
    if (!roots.any_root) {
      rep.verdict = RankOneReport::Verdict::FiniteType;
      rep.method = "no rank-one adjoint directions (minor gcd is constant)";
      return rep;
    }
    // A projective root exists; certify with a rational witness if we have
    // one, otherwise report the complex-root certificate.
    std::vector<Vec> candidates;
    if (g.all_zero) {
      candidates.push_back(Vec{rat(1), rat(0)});
      candidates.push_back(Vec{rat(0), rat(1)});
      candidates.push_back(Vec{rat(1), rat(1)});
    }
    for (const auto& [x, y] : roots.rational) candidates.push_back(Vec{x, y});
    for (const Vec& x : candidates) {
      if (is_zero(x[0]) && is_zero(x[1])) continue;
      if (exact_rank(adjoint_matrix(m, x)) == 1) {
        rep.verdict = RankOneReport::Verdict::InfiniteType;
        rep.method = "rank-one adjoint direction (minor gcd nonconstant)";
        rep.witness = x;
        return rep;
      }
    }
    rep.verdict = RankOneReport::Verdict::InfiniteType;
    rep.method = "rank-one adjoint direction (minor gcd nonconstant)";
    rep.witness_note = "rank-one locus defined over C only; no rational witness";
    return rep;
  }

  // Randomized witness search; sound for InfiniteType only.
  std::mt19937 rng(98765);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<Vec> pool;
  for (int a = 0; a < n; ++a) {
    Vec e(n, Rational(0));
    e[a] = 1;
    pool.push_back(e);
  }
  for (int trial = 0; trial < 500; ++trial) {
    Vec x(n, Rational(0));
    bool nz = false;
    for (int i = 0; i < n; ++i) {
      int c = coef(rng);
      x[i] = rat(c);
      nz = nz || c;
    }
    if (nz) pool.push_back(std::move(x));
  }
  for (const Vec& x : pool) {
    if (exact_rank(adjoint_matrix(m, x)) == 1) {
      rep.verdict = RankOneReport::Verdict::InfiniteType;
      rep.method = "rank-one adjoint witness found by search";
      rep.witness = x;
      return rep;
    }
  }
  rep.method = "no decision: witness search exhausted";
  return rep;
}

long long symmetry_bound(const Gnla& m, const ProlongResult& pr) {
  if (pr.status != ProlongStatus::StabilizedAtZero)
    throw std::logic_error("symmetry bound requires a stabilized prolongation");
  long long total = pr.g0_dim;
  for (int d : m.dims()) total += d;
  for (const auto& l : pr.layers) total += l.dim();
  return total;
}

}  // namespace gnlat
