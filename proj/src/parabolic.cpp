#include "gnlat/parabolic.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace gnlat {

namespace {

long long root_norm2(const RootSystem& rs, int idx) {
  return 2ll * rs.positive_halfnorm[idx];
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs) : rs_(rs) {
  const int nr = static_cast<int>(rs_.positive.size());
  npos_.assign(nr, std::vector<long long>(nr, 0));

  // Special pairs per target root, processed by increasing height; the
  // extraspecial pair (minimal first member in the root order) is pinned
  // to the down-string length, the rest follow from the Jacobi identity.
  for (int g = 0; g < nr; ++g) {
    if (rs_.positive_height[g] < 2) continue;
    std::vector<std::pair<int, int>> special;
    for (int a = 0; a < nr; ++a) {
      std::vector<int> rest(rs_.rank);
      bool ok = true;
      for (int i = 0; i < rs_.rank; ++i) {
        rest[i] = rs_.positive[g][i] - rs_.positive[a][i];
        if (rest[i] < 0) ok = false;
      }
      if (!ok) continue;
      int b = rs_.root_index(rest);
      if (b < 0 || b <= a) continue;
      special.emplace_back(a, b);
    }
    std::sort(special.begin(), special.end());
    if (special.empty()) throw std::logic_error("non-simple root with no special pair");
    const auto [a0, b0] = special.front();
    npos_[a0][b0] = string_down(a0, b0) + 1;
    npos_[b0][a0] = -npos_[a0][b0];
    for (size_t t = 1; t < special.size(); ++t) {
      const auto [a, b] = special[t];
      // Jacobi on (e_a, e_b, e_{-a0}); every term reduces to known
      // constants on roots of smaller height.
      const int sb = sum_root(b + 1, -(a0 + 1));   // b - a0
      const int sa = sum_root(a + 1, -(a0 + 1));   // a - a0
      long long acc = 0;
      if (sb != 0) acc += n_signed(b + 1, -(a0 + 1)) * n_signed(sb, a + 1);
      if (sa != 0) acc += n_signed(-(a0 + 1), a + 1) * n_signed(sa, b + 1);
      const long long denom = n_signed(g + 1, -(a0 + 1));
      if (denom == 0 || acc % denom) throw std::logic_error("Chevalley recursion failed");
      npos_[a][b] = -acc / denom;
      npos_[b][a] = -npos_[a][b];
    }
  }
}

int ChevalleyBasis::string_down(int a, int b) const {
  // longest p with root(b) - p root(a) still a root (of either sign)
  std::vector<int> v = rs_.positive[b];
  std::vector<int> neg(rs_.rank);
  int p = 0;
  while (true) {
    bool nonneg = true, nonpos = true, zero = true;
    for (int i = 0; i < rs_.rank; ++i) {
      v[i] -= rs_.positive[a][i];
      neg[i] = -v[i];
      if (v[i] > 0) nonpos = false;
      if (v[i] < 0) nonneg = false;
      if (v[i] != 0) zero = false;
    }
    if (zero) break;
    if (nonneg && rs_.is_positive_root(v)) {
      ++p;
      continue;
    }
    if (nonpos && rs_.is_positive_root(neg)) {
      ++p;
      continue;
    }
    break;
  }
  return p;
}

long long ChevalleyBasis::n_pos(int a, int b) const { return npos_[a][b]; }

int ChevalleyBasis::sum_root(int x, int y) const {
  std::vector<int> v(rs_.rank);
  const auto& cx = rs_.positive[std::abs(x) - 1];
  const auto& cy = rs_.positive[std::abs(y) - 1];
  const int sx = x > 0 ? 1 : -1, sy = y > 0 ? 1 : -1;
  bool pos = true, neg = true;
  for (int i = 0; i < rs_.rank; ++i) {
    v[i] = sx * cx[i] + sy * cy[i];
    if (v[i] > 0) neg = false;
    if (v[i] < 0) pos = false;
  }
  if (pos == neg) return 0;  // zero or mixed signs: not a root
  if (pos) {
    int idx = rs_.root_index(v);
    return idx < 0 ? 0 : idx + 1;
  }
  for (int& e : v) e = -e;
  int idx = rs_.root_index(v);
  return idx < 0 ? 0 : -(idx + 1);
}

long long ChevalleyBasis::n_signed(int x, int y) const {
  if (sum_root(x, y) == 0) return 0;
  if (x > 0 && y > 0) return npos_[x - 1][y - 1];
  if (x < 0 && y < 0) return -npos_[-x - 1][-y - 1];
  if (x < 0) return -n_signed(y, x);
  // x = alpha > 0, y = -beta
  const int a = x - 1, b = -y - 1;
  const int s = sum_root(x, y);
  if (s > 0) {
    // alpha - beta = delta > 0: N = -(delta,delta) N_{beta,delta}/(alpha,alpha)
    const int d = s - 1;
    long long num = -root_norm2(rs_, d) * npos_[b][d];
    long long den = root_norm2(rs_, a);
    if (num % den) throw std::logic_error("mixed Chevalley constant not integral");
    return num / den;
  }
  // beta - alpha = delta > 0: N = (delta,delta) N_{delta,alpha}/(beta,beta)
  const int d = -s - 1;
  long long num = root_norm2(rs_, d) * npos_[d][a];
  long long den = root_norm2(rs_, b);
  if (num % den) throw std::logic_error("mixed Chevalley constant not integral");
  return num / den;
}

std::vector<long long> ChevalleyBasis::coroot(int index) const {
  std::vector<long long> k(rs_.rank);
  for (int i = 0; i < rs_.rank; ++i) {
    long long num = static_cast<long long>(rs_.positive[index][i]) * rs_.sym[i];
    if (num % rs_.positive_halfnorm[index]) throw std::logic_error("coroot not integral");
    k[i] = num / rs_.positive_halfnorm[index];
  }
  return k;
}

long long ChevalleyBasis::cartan_pairing(int s, int i) const {
  const auto& c = rs_.positive[std::abs(s) - 1];
  long long p = 0;
  for (int j = 0; j < rs_.rank; ++j) p += rs_.cartan[i][j] * c[j];
  return s > 0 ? p : -p;
}

bool chevalley_jacobi_exhaustive(const ChevalleyBasis& cb) {
  const RootSystem& rs = cb.roots();
  const int r = rs.rank;
  const int nr = static_cast<int>(rs.positive.size());
  const int dim = r + 2 * nr;
  // basis ids: 0..r-1 cartan; r + 2t = +root t; r + 2t + 1 = -root t
  auto signed_of = [&](int id) { return (id - r) % 2 == 0 ? (id - r) / 2 + 1 : -((id - r) / 2 + 1); };

  struct Acc {
    std::vector<long long> h;
    std::map<int, long long> roots;
    void add_h(const std::vector<long long>& k, long long c) {
      if (h.empty()) h.assign(k.size(), 0);
      for (size_t i = 0; i < k.size(); ++i) h[i] += c * k[i];
    }
    void add_root(int s, long long c) {
      if (c) roots[s] += c;
    }
    bool zero() const {
      for (long long v : h)
        if (v) return false;
      for (const auto& [s, c] : roots)
        if (c) return false;
      return true;
    }
  };

  // bracket of basis x with (coeff, signed root u): appended to acc
  auto bracket_basis_root = [&](int x, long long coeff, int u, Acc& acc) {
    if (x < r) {
      acc.add_root(u, coeff * cb.cartan_pairing(u, x));
      return;
    }
    const int s = signed_of(x);
    if (s == -u) {
      std::vector<long long> k = cb.coroot(std::abs(s) - 1);
      if (s < 0)
        for (auto& e : k) e = -e;
      // [e_s, e_u] with u = -s: equals sign(s) * coroot(|s|)
      acc.add_h(k, coeff);
      return;
    }
    const int sum = cb.sum_root(s, u);
    if (sum != 0) acc.add_root(sum, coeff * cb.n_signed(s, u));
  };

  // [x, y] for basis ids, into acc with multiplier c
  auto bracket_pair = [&](int x, int y, long long c, Acc& acc) {
    if (x < r && y < r) return;
    if (x < r) {
      const int u = signed_of(y);
      acc.add_root(u, c * cb.cartan_pairing(u, x));
      return;
    }
    if (y < r) {
      const int u = signed_of(x);
      acc.add_root(u, -c * cb.cartan_pairing(u, y));
      return;
    }
    bracket_basis_root(x, c, signed_of(y), acc);
  };

  for (int x = 0; x < dim; ++x)
    for (int y = x + 1; y < dim; ++y)
      for (int z = y + 1; z < dim; ++z) {
        Acc total;
        auto term = [&](int p, int q, int t) {
          // [p, [q, t]]
          Acc inner;
          bracket_pair(q, t, 1, inner);
          if (!inner.h.empty()) {
            // [p, h-part]: nonzero only if p is a root vector
            if (p >= r) {
              const int u = signed_of(p);
              long long pair = 0;
              for (int i = 0; i < r; ++i) pair += inner.h[i] * cb.cartan_pairing(u, i);
              // [e_u, sum k_i h_i] = -pair e_u
              total.add_root(u, -pair);
            }
          }
          for (const auto& [u, cval] : inner.roots)
            if (cval) bracket_basis_root(p, cval, u, total);
        };
        term(x, y, z);
        term(y, z, x);
        term(z, x, y);
        if (!total.zero()) return false;
      }
  return true;
}

namespace {

struct Component {
  std::vector<int> nodes;  // 0-based original nodes, ascending
};

std::vector<Component> connected_components(const RootSystem& rs,
                                            const std::vector<bool>& keep) {
  std::vector<Component> out;
  std::vector<bool> seen(rs.rank, false);
  for (int start = 0; start < rs.rank; ++start) {
    if (!keep[start] || seen[start]) continue;
    Component comp;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.nodes.push_back(u);
      for (int v = 0; v < rs.rank; ++v)
        if (keep[v] && !seen[v] && rs.cartan[u][v] != 0) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    std::sort(comp.nodes.begin(), comp.nodes.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::pair<char, int> classify_component(const RootSystem& rs, const Component& comp) {
  const int m = static_cast<int>(comp.nodes.size());
  if (m == 1) return {'A', 1};
  int max_mult = 0;
  std::pair<int, int> double_edge{-1, -1};
  std::vector<int> degree(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int u = comp.nodes[i], v = comp.nodes[j];
      int mult = rs.cartan[u][v] * rs.cartan[v][u];
      if (mult > 0) {
        ++degree[i];
        ++degree[j];
        if (mult > max_mult) {
          max_mult = mult;
          double_edge = {i, j};
        }
      }
    }
  if (max_mult == 3) return {'G', 2};
  if (max_mult == 2) {
    if (m == 2) return {'B', 2};
    const auto [i, j] = double_edge;
    if (degree[i] >= 2 && degree[j] >= 2) return {'F', 4};
    // leaf end of the double edge: short => B, long => C
    const int leaf = degree[i] == 1 ? i : j;
    const int other = leaf == i ? j : i;
    const int u = comp.nodes[leaf], v = comp.nodes[other];
    // A[u][v] = 2(a_u, a_v)/(a_u, a_u) = -2 exactly when u is short
    const bool leaf_short = rs.cartan[u][v] == -2;
    return {leaf_short ? 'B' : 'C', m};
  }
  // simply laced
  int branch = -1;
  for (int i = 0; i < m; ++i)
    if (degree[i] == 3) branch = i;
  if (branch < 0) return {'A', m};
  // arm lengths from the branch node
  std::vector<int> arms;
  for (int i = 0; i < m; ++i) {
    int u = comp.nodes[i];
    if (i == branch || rs.cartan[comp.nodes[branch]][u] == 0) continue;
    int len = 1, prev = comp.nodes[branch], cur = u;
    while (true) {
      int next = -1;
      for (int t = 0; t < m; ++t) {
        int w = comp.nodes[t];
        if (w != prev && w != cur && rs.cartan[cur][w] != 0) next = w;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::logic_error("unexpected diagram shape");
  if (arms[0] == 1 && arms[1] == 1) return {'D', m};
  if (arms == std::vector<int>{1, 2, 2}) return {'E', 6};
  if (arms == std::vector<int>{1, 2, 3}) return {'E', 7};
  if (arms == std::vector<int>{1, 2, 4}) return {'E', 8};
  throw std::logic_error("unexpected diagram shape");
}

// All Bourbaki labellings of the component (orbit of one under the
// diagram automorphisms).
std::vector<std::vector<int>> all_bourbaki_labels(const RootSystem& rs, const Component& comp,
                                                  char series, int rank) {
  const RootSystem model = build_root_system(series, rank);
  const int m = rank;
  std::vector<int> assign(m, -1), used(m, 0);
  std::vector<std::vector<int>> found;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == m) {
      found.push_back(assign);
      return;
    }
    for (int lbl = 0; lbl < m; ++lbl) {
      if (used[lbl]) continue;
      bool ok = true;
      for (int prev = 0; prev < pos && ok; ++prev) {
        int u = comp.nodes[pos], v = comp.nodes[prev];
        if (rs.cartan[u][v] != model.cartan[lbl][assign[prev]] ||
            rs.cartan[v][u] != model.cartan[assign[prev]][lbl])
          ok = false;
      }
      if (!ok) continue;
      assign[pos] = lbl;
      used[lbl] = 1;
      rec(pos + 1);
      used[lbl] = 0;
      assign[pos] = -1;
    }
  };
  rec(0);
  if (found.empty()) throw std::logic_error("component does not match its classified type");
  return found;
}

// Canonical labelling. The diagram-automorphism freedom is fixed so that
// the classical sub-diagram identifications come out in their customary
// orientation: on a chain, label 1 sits at the end farthest from the
// crossed attachment; on a D-fork, the smaller ambient node carries the
// higher spin label. Remaining ties break lexicographically.
std::vector<int> bourbaki_labels(const RootSystem& rs, const Component& comp, char series,
                                 int rank, const std::vector<int>& attachments) {
  auto candidates = all_bourbaki_labels(rs, comp, series, rank);
  const int m = rank;

  auto node_of_label = [&](const std::vector<int>& l, int lbl) {
    for (int pos = 0; pos < m; ++pos)
      if (l[pos] == lbl) return comp.nodes[pos];
    return -1;
  };
  auto dist_to_att = [&](int node) {
    // BFS inside the component
    std::map<int, int> d{{node, 0}};
    std::vector<int> queue{node};
    for (size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int v : comp.nodes)
        if (!d.count(v) && rs.cartan[u][v] != 0) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
    }
    int best = 1 << 20;
    for (int a : attachments)
      if (d.count(a)) best = std::min(best, d[a]);
    return best;
  };

  const std::vector<int>* best = nullptr;
  std::vector<long long> best_key;
  for (const auto& cand : candidates) {
    std::vector<long long> key;
    if (series == 'A' && m >= 2) {
      key.push_back(-static_cast<long long>(dist_to_att(node_of_label(cand, 0))));
      key.push_back(node_of_label(cand, 0));
    } else if (series == 'D') {
      key.push_back(node_of_label(cand, m - 1));      // prefer small ambient on top
      key.push_back(node_of_label(cand, m - 2));
    }
    for (int v : cand) key.push_back(v);
    if (!best || key < best_key) {
      best = &cand;
      best_key = key;
    }
  }
  return *best;
}

}  // namespace

ParabolicGrading parabolic_grading(const RootSystem& rs, const std::vector<int>& crossed) {
  if (crossed.empty()) throw std::invalid_argument("at least one crossed node required");
  std::vector<bool> is_crossed(rs.rank, false);
  for (int c : crossed) {
    if (c < 1 || c > rs.rank) throw std::invalid_argument("crossed node out of range");
    is_crossed[c - 1] = true;
  }

  ParabolicGrading pg;
  pg.rs = rs;
  pg.crossed = crossed;
  std::sort(pg.crossed.begin(), pg.crossed.end());
  pg.crossed.erase(std::unique(pg.crossed.begin(), pg.crossed.end()), pg.crossed.end());
  pg.center_dim = static_cast<int>(pg.crossed.size());

  int grade0 = 0;
  for (size_t idx = 0; idx < rs.positive.size(); ++idx) {
    int g = 0;
    for (int c : pg.crossed) g += rs.positive[idx][c - 1];
    if (g == 0) {
      ++grade0;
      continue;
    }
    if (static_cast<int>(pg.layer_roots.size()) < g) pg.layer_roots.resize(g);
    pg.layer_roots[g - 1].push_back(static_cast<int>(idx));
  }
  pg.depth = static_cast<int>(pg.layer_roots.size());
  for (const auto& l : pg.layer_roots) pg.growth.push_back(static_cast<int>(l.size()));
  pg.g0_dim = rs.rank + 2ll * grade0;

  std::vector<bool> keep(rs.rank, false);
  for (int i = 0; i < rs.rank; ++i) keep[i] = !is_crossed[i];
  for (const Component& comp : connected_components(rs, keep)) {
    auto [series, rank] = classify_component(rs, comp);
    std::vector<int> attachments;
    for (int u : comp.nodes)
      for (int c : pg.crossed)
        if (rs.cartan[u][c - 1] != 0) attachments.push_back(u);
    std::vector<int> labels = bourbaki_labels(rs, comp, series, rank, attachments);
    LeviComponentInfo info;
    info.series = series;
    info.rank = rank;
    info.nodes.assign(rank, 0);
    for (size_t pos = 0; pos < comp.nodes.size(); ++pos)
      info.nodes[labels[pos]] = comp.nodes[pos] + 1;
    pg.levi.push_back(std::move(info));
  }

  pg.g0_is_gl = pg.levi.size() == 1 && pg.levi[0].series == 'A' && pg.center_dim == 1;
  if (pg.g0_is_gl) {
    pg.gl_k = pg.levi[0].rank + 1;
    pg.g0_desc = "gl(" + std::to_string(pg.gl_k) + ")";
  } else {
    std::string s;
    for (const auto& c : pg.levi) {
      if (!s.empty()) s += " x ";
      s += std::string(1, c.series) + std::to_string(c.rank);
    }
    if (s.empty()) s = "0";
    pg.g0_desc = s + " + center(" + std::to_string(pg.center_dim) + ")";
  }
  return pg;
}

NilradicalResult negative_nilradical(const RootSystem& rs, const std::vector<int>& crossed) {
  ChevalleyBasis cb(rs);
  NilradicalResult out;
  out.grading = parabolic_grading(rs, crossed);
  const ParabolicGrading& pg = out.grading;
  out.abelian = pg.depth == 1;

  // position of a positive root inside its layer
  std::map<int, std::pair<int, int>> where;  // root index -> (layer, pos)
  for (int k = 1; k <= pg.depth; ++k)
    for (size_t p = 0; p < pg.layer_roots[k - 1].size(); ++p)
      where[pg.layer_roots[k - 1][p]] = {k, static_cast<int>(p)};

  GnlaData d;
  d.name = "m_" + std::string(1, rs.series) + std::to_string(rs.rank) + "_p";
  for (int c : pg.crossed) d.name += std::to_string(c);
  d.dims = pg.growth;
  for (int i = 1; i <= pg.depth; ++i) {
    for (int j = i; j <= pg.depth; ++j) {
      if (i + j > pg.depth) continue;
      for (size_t a = 0; a < pg.layer_roots[i - 1].size(); ++a) {
        for (size_t b = (i == j ? a + 1 : 0); b < pg.layer_roots[j - 1].size(); ++b) {
          const int ra = pg.layer_roots[i - 1][a];
          const int rb = pg.layer_roots[j - 1][b];
          const int sum = cb.sum_root(ra + 1, rb + 1);
          if (sum == 0) continue;
          // [e_{-ra}, e_{-rb}] = -N(ra, rb) e_{-(ra+rb)}
          const long long n = -cb.n_pos(ra, rb);
          if (n == 0) continue;
          auto [lk, lp] = where.at(sum - 1);
          RawBracket br;
          br.li = i;
          br.la = static_cast<int>(a);
          br.lj = j;
          br.lb = static_cast<int>(b);
          br.value.push_back({lk, lp, rat(static_cast<long>(n))});
          d.brackets.push_back(std::move(br));
        }
      }
    }
  }

  // Grade-zero action: Cartan, then +/- pairs of grade-zero roots.
  LeviBlock block;
  block.series = rs.series;
  block.rank = rs.rank;
  block.crossed = pg.crossed;
  block.components = pg.levi;
  auto layer_matrix = [&](int k) { return RationalMatrix(pg.growth[k - 1], pg.growth[k - 1]); };

  for (int i = 0; i < rs.rank; ++i) {
    LeviGenerator gen;
    gen.kind = "cartan";
    gen.node = i + 1;
    for (int k = 1; k <= pg.depth; ++k) {
      RationalMatrix m = layer_matrix(k);
      for (size_t p = 0; p < pg.layer_roots[k - 1].size(); ++p) {
        long long val = -cb.cartan_pairing(pg.layer_roots[k - 1][p] + 1, i);
        if (val) m.set(static_cast<int>(p), static_cast<int>(p), rat(static_cast<long>(val)));
      }
      gen.matrices.push_back(std::move(m));
    }
    block.generators.push_back(std::move(gen));
  }
  for (size_t idx = 0; idx < rs.positive.size(); ++idx) {
    int g = 0;
    for (int c : pg.crossed) g += rs.positive[idx][c - 1];
    if (g != 0) continue;
    for (int sgn : {1, -1}) {
      LeviGenerator gen;
      gen.kind = "root";
      gen.root = rs.positive[idx];
      if (sgn < 0)
        for (int& e : gen.root) e = -e;
      const int s = sgn * (static_cast<int>(idx) + 1);
      for (int k = 1; k <= pg.depth; ++k) {
        RationalMatrix m = layer_matrix(k);
        for (size_t p = 0; p < pg.layer_roots[k - 1].size(); ++p) {
          const int rb = pg.layer_roots[k - 1][p];
          // [e_s, e_{-rb}] = N(s, -rb) e_{s - rb}; the target stays in
          // grade -k because s has grade 0.
          const int target = cb.sum_root(s, -(rb + 1));
          if (target == 0) continue;
          if (target > 0) throw std::logic_error("grade-zero action left the nilradical");
          const long long n = cb.n_signed(s, -(rb + 1));
          auto [lk, lp] = where.at(-target - 1);
          if (lk != k) throw std::logic_error("grade-zero action changed the grade");
          if (n) m.set(lp, static_cast<int>(p), rat(static_cast<long>(n)));
        }
        gen.matrices.push_back(std::move(m));
      }
      block.generators.push_back(std::move(gen));
    }
  }

  out.algebra = Gnla::from_data(d).with_levi(std::move(block));
  return out;
}

IrrepSum layer_decomposition(const ParabolicGrading& pg, int k) {
  if (k < 1 || k > pg.depth) throw std::invalid_argument("layer out of range");
  std::vector<RootSystem> parts;
  for (const auto& comp : pg.levi) parts.push_back(build_root_system(comp.series, comp.rank));
  std::vector<const RootSystem*> pparts;
  for (const auto& p : parts) pparts.push_back(&p);

  WeightMultiset w;
  for (int idx : pg.layer_roots[k - 1]) {
    WeightVec coords;
    for (const auto& comp : pg.levi)
      for (int node : comp.nodes) {
        long long pair = 0;
        for (int j = 0; j < pg.rs.rank; ++j)
          pair += pg.rs.cartan[node - 1][j] * pg.rs.positive[idx][j];
        coords.push_back(static_cast<int>(pair));
      }
    w.add(coords, 1);
  }
  return decompose_product(pparts, w);
}

std::string levi_irrep_label(const ParabolicGrading& pg, const WeightVec& w) {
  if (pg.levi.empty()) return "G(0)";
  if (pg.levi.size() == 1) return irrep_label(w);
  std::string out;
  size_t off = 0;
  for (const auto& comp : pg.levi) {
    WeightVec slice(w.begin() + off, w.begin() + off + comp.rank);
    if (!out.empty()) out += "(x)";
    out += irrep_label(slice);
    off += comp.rank;
  }
  return out;
}

DerivationLayer levi_derivations(const LeviBlock& block) {
  DerivationLayer out;
  for (const LeviGenerator& gen : block.generators) {
    Derivation d;
    for (const RationalMatrix& m : gen.matrices) {
      DenseMat mat = dense_zero(m.rows(), m.cols());
      for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) mat[r][c] = v;
      d.layer.push_back(std::move(mat));
    }
    out.basis.push_back(std::move(d));
  }
  return out;
}

}  // namespace gnlat
