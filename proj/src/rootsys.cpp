#include "gnlat/rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_set>

namespace gnlat {

namespace {

std::vector<std::vector<int>> cartan_matrix(char series, int rank) {
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (series) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("A requires rank >= 1");
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    case 'B':
      if (rank < 2) throw std::invalid_argument("B requires rank >= 2");
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      a[rank - 1][rank - 2] = -2;  // last simple root short
      break;
    case 'C':
      if (rank < 3) throw std::invalid_argument("C requires rank >= 3");
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      a[rank - 2][rank - 1] = -2;  // last simple root long
      break;
    case 'D':
      if (rank < 4) throw std::invalid_argument("D requires rank >= 4");
      for (int i = 0; i + 1 < rank - 1; ++i) chain(i, i + 1);
      a[rank - 1][rank - 2] = a[rank - 2][rank - 1] = 0;
      chain(rank - 3, rank - 1);
      break;
    case 'E': {
      if (rank < 6 || rank > 8) throw std::invalid_argument("E requires rank 6..8");
      chain(0, 2);
      chain(1, 3);
      for (int i = 2; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    }
    case 'F':
      if (rank != 4) throw std::invalid_argument("F requires rank 4");
      chain(0, 1);
      chain(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("G requires rank 2");
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw std::invalid_argument("unknown series");
  }
  return a;
}

std::vector<int> symmetrizer(char series, int rank) {
  std::vector<int> d(rank, 1);
  switch (series) {
    case 'B':
      for (int i = 0; i + 1 < rank; ++i) d[i] = 2;
      break;
    case 'C':
      d[rank - 1] = 2;
      break;
    case 'F':
      d[0] = d[1] = 2;
      break;
    case 'G':
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

}  // namespace

WeightVec RootSystem::weight_of(const std::vector<int>& c) const {
  WeightVec w(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) w[i] += cartan[i][j] * c[j];
  return w;
}

Rational RootSystem::height(const WeightVec& w) const {
  Rational h(0);
  for (int i = 0; i < rank; ++i)
    if (w[i]) h += level[i] * w[i];
  return h;
}

bool RootSystem::is_dominant(const WeightVec& w) const {
  for (int x : w)
    if (x < 0) return false;
  return true;
}

void RootSystem::reflect(WeightVec& w, int i) const {
  const int c = w[i];
  if (c == 0) return;
  for (int m = 0; m < rank; ++m) w[m] -= c * cartan[m][i];
}

WeightVec RootSystem::dominantize(WeightVec w) const {
  for (int i = 0; i < rank;) {
    if (w[i] < 0) {
      reflect(w, i);
      i = 0;
    } else {
      ++i;
    }
  }
  return w;
}

bool RootSystem::is_positive_root(const std::vector<int>& c) const {
  return index_.find(c) != index_.end();
}

int RootSystem::root_index(const std::vector<int>& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

long long RootSystem::form_weight_root(const WeightVec& w,
                                       const std::vector<int>& c) const {
  long long s = 0;
  for (int i = 0; i < rank; ++i) s += static_cast<long long>(sym[i]) * c[i] * w[i];
  return s;
}

long long RootSystem::coroot_pairing(const WeightVec& w, int idx) const {
  long long f = form_weight_root(w, positive[idx]);
  long long h = positive_halfnorm[idx];
  if (f % h) throw std::logic_error("coroot pairing not integral");
  return f / h;
}

std::vector<int> RootSystem::root_coords_of_weight(const WeightVec& w) const {
  std::vector<int> out(rank);
  for (int i = 0; i < rank; ++i) {
    Rational s(0);
    for (int j = 0; j < rank; ++j)
      if (w[j]) s += inv_cartan[i][j] * w[j];
    if (s.get_den() != 1) throw std::invalid_argument("weight not in the root lattice");
    out[i] = static_cast<int>(s.get_num().get_si());
  }
  return out;
}

RootSystem build_root_system(char series, int rank) {
  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  rs.cartan = cartan_matrix(series, rank);
  rs.sym = symmetrizer(series, rank);

  // Close the simple roots under root strings, height by height.
  std::unordered_set<WeightVec, VecHash> found;
  std::vector<std::vector<std::vector<int>>> by_height(2);
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    by_height[1].push_back(e);
    found.insert(e);
  }
  for (size_t h = 1; h < by_height.size(); ++h) {
    for (const auto& beta : by_height[h]) {
      for (int i = 0; i < rank; ++i) {
        long long pair = 0;
        for (int j = 0; j < rank; ++j) pair += rs.cartan[i][j] * beta[j];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (found.find(down) == found.end()) break;
          ++p;
        }
        if (p - pair >= 1) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (found.insert(up).second) {
            if (by_height.size() <= h + 1) by_height.resize(h + 2);
            by_height[h + 1].push_back(up);
          }
        }
      }
    }
  }
  for (auto& level_roots : by_height) {
    std::sort(level_roots.begin(), level_roots.end());
    for (auto& r : level_roots) rs.positive.push_back(r);
  }
  for (size_t i = 0; i < rs.positive.size(); ++i) {
    rs.index_[rs.positive[i]] = static_cast<int>(i);
    rs.positive_weight.push_back(rs.weight_of(rs.positive[i]));
    int ht = 0;
    long long norm = 0;
    for (int j = 0; j < rank; ++j) {
      ht += rs.positive[i][j];
      norm += static_cast<long long>(rs.sym[j]) * rs.positive[i][j] * rs.positive_weight[i][j];
    }
    rs.positive_height.push_back(ht);
    if (norm % 2) throw std::logic_error("odd root norm");
    rs.positive_halfnorm.push_back(static_cast<int>(norm / 2));
  }

  // Rational inverse of the Cartan matrix and the height functional.
  RationalMatrix a(rank, rank);
  RationalMatrix at(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (rs.cartan[i][j]) {
        a.set(i, j, rat(rs.cartan[i][j]));
        at.set(j, i, rat(rs.cartan[i][j]));
      }
  rs.inv_cartan.assign(rank, Vec(rank, Rational(0)));
  for (int j = 0; j < rank; ++j) {
    Vec e(rank, Rational(0));
    e[j] = 1;
    auto col = solve(a, e);
    if (!col) throw std::logic_error("singular Cartan matrix");
    for (int i = 0; i < rank; ++i) rs.inv_cartan[i][j] = (*col)[i];
  }
  Vec ones(rank, Rational(1));
  auto lvl = solve(at, ones);
  if (!lvl) throw std::logic_error("singular Cartan matrix");
  rs.level = *lvl;
  return rs;
}

Integer weyl_dim(const RootSystem& rs, const WeightVec& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("weyl_dim requires a dominant weight");
  Rational dim(1);
  for (size_t a = 0; a < rs.positive.size(); ++a) {
    long num = 0, den = 0;
    for (int i = 0; i < rs.rank; ++i) {
      const long t = static_cast<long>(rs.sym[i]) * rs.positive[a][i];
      num += t * (lambda[i] + 1);
      den += t;
    }
    dim *= rat(num, den);
  }
  dim.canonicalize();
  if (dim.get_den() != 1) throw std::logic_error("Weyl dimension not integral");
  return dim.get_num();
}

namespace {

// All dominant weights of the irreducible with highest weight lambda:
// closure of {lambda} under "walk down a root string, dominantize". The
// final multiset size is checked against the Weyl dimension, so an
// incomplete closure cannot go unnoticed.
std::vector<WeightVec> dominant_weights(const RootSystem& rs, const WeightVec& lambda) {
  std::unordered_set<WeightVec, VecHash> seen{lambda};
  std::vector<WeightVec> queue{lambda}, out{lambda};
  while (!queue.empty()) {
    WeightVec mu = std::move(queue.back());
    queue.pop_back();
    for (size_t a = 0; a < rs.positive.size(); ++a) {
      const long long t = rs.coroot_pairing(mu, static_cast<int>(a));
      WeightVec nu = mu;
      for (long long k = 1; k <= t; ++k) {
        for (int i = 0; i < rs.rank; ++i) nu[i] -= rs.positive_weight[a][i];
        WeightVec rep = rs.dominantize(nu);
        if (seen.insert(rep).second) {
          out.push_back(rep);
          queue.push_back(rep);
        }
      }
    }
  }
  return out;
}

void expand_orbit(const RootSystem& rs, const WeightVec& mu, long long mult,
                  WeightMultiset& out) {
  std::unordered_set<WeightVec, VecHash> seen{mu};
  std::vector<WeightVec> queue{mu};
  out.add(mu, mult);
  while (!queue.empty()) {
    WeightVec w = std::move(queue.back());
    queue.pop_back();
    for (int i = 0; i < rs.rank; ++i) {
      if (w[i] == 0) continue;
      WeightVec r = w;
      rs.reflect(r, i);
      if (seen.insert(r).second) {
        out.add(r, mult);
        queue.push_back(r);
      }
    }
  }
}

WeightMultiset compute_freudenthal(const RootSystem& rs, const WeightVec& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("freudenthal_weights requires a dominant weight");
  std::vector<WeightVec> dom = dominant_weights(rs, lambda);
  std::vector<std::pair<Rational, WeightVec>> order;
  order.reserve(dom.size());
  for (auto& w : dom) order.emplace_back(rs.height(w), std::move(w));
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });

  const Rational h_lambda = order.front().first;
  std::unordered_map<WeightVec, long long, VecHash> mult;
  mult[lambda] = 1;
  for (size_t idx = 1; idx < order.size(); ++idx) {
    const WeightVec& mu = order[idx].second;
    const Rational& h_mu = order[idx].first;
    long long num = 0;
    for (size_t a = 0; a < rs.positive.size(); ++a) {
      WeightVec nu = mu;
      for (long k = 1;; ++k) {
        if (h_mu + k * static_cast<long>(rs.positive_height[a]) > h_lambda) break;
        for (int i = 0; i < rs.rank; ++i) nu[i] += rs.positive_weight[a][i];
        auto it = mult.find(rs.dominantize(nu));
        if (it == mult.end()) break;  // root strings are unbroken
        num += it->second * rs.form_weight_root(nu, rs.positive[a]);
      }
    }
    WeightVec diff(rs.rank);
    for (int i = 0; i < rs.rank; ++i) diff[i] = lambda[i] - mu[i];
    const std::vector<int> kvec = rs.root_coords_of_weight(diff);
    long long den = 0;
    for (int i = 0; i < rs.rank; ++i)
      den += static_cast<long long>(rs.sym[i]) * kvec[i] * (lambda[i] + mu[i] + 2);
    if (den <= 0 || (2 * num) % den) throw std::logic_error("Freudenthal recursion failed");
    mult[mu] = 2 * num / den;
  }

  WeightMultiset out;
  for (const auto& [mu, c] : mult) expand_orbit(rs, mu, c, out);
  if (Integer(static_cast<long>(out.size())) != weyl_dim(rs, lambda))
    throw std::logic_error("weight multiset size disagrees with the Weyl dimension");
  return out;
}

}  // namespace

const WeightMultiset& freudenthal_weights(const RootSystem& rs, const WeightVec& lambda) {
  using Key = std::tuple<char, int, WeightVec>;
  static std::map<Key, std::unique_ptr<WeightMultiset>> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  Key key{rs.series, rs.rank, lambda};
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto value = std::make_unique<WeightMultiset>(compute_freudenthal(rs, lambda));
    it = cache.emplace(std::move(key), std::move(value)).first;
  }
  return *it->second;
}

WeightMultiset scale_weights(const WeightMultiset& v, int t) {
  WeightMultiset out;
  for (const auto& [w, m] : v.mult) {
    WeightVec s = w;
    for (int& x : s) x *= t;
    out.add(s, m);
  }
  return out;
}

WeightMultiset tensor_weights(const RootSystem& rs, const WeightMultiset& a,
                              const WeightMultiset& b) {
  for (const auto& [w, m] : a.mult)
    if (static_cast<int>(w.size()) != rs.rank)
      throw std::invalid_argument("tensor_weights: rank mismatch");
  for (const auto& [w, m] : b.mult)
    if (static_cast<int>(w.size()) != rs.rank)
      throw std::invalid_argument("tensor_weights: rank mismatch");
  WeightMultiset out;
  WeightVec s(rs.rank);
  for (const auto& [wa, ma] : a.mult)
    for (const auto& [wb, mb] : b.mult) {
      for (int i = 0; i < rs.rank; ++i) s[i] = wa[i] + wb[i];
      out.add(s, ma * mb);
    }
  return out;
}

WeightMultiset exterior_square_weights(const RootSystem& rs, const WeightMultiset& v) {
  WeightMultiset sq = tensor_weights(rs, v, v);
  const WeightMultiset doubled = scale_weights(v, 2);
  for (const auto& [w, m] : doubled.mult) sq.add(w, -m);
  WeightMultiset out;
  for (const auto& [w, m] : sq.mult) {
    if (m % 2 || m < 0) throw std::logic_error("exterior square character not integral");
    out.add(w, m / 2);
  }
  return out;
}

WeightMultiset exterior_cube_weights(const RootSystem& rs, const WeightMultiset& v) {
  WeightMultiset acc = tensor_weights(rs, tensor_weights(rs, v, v), v);  // p1^3
  const WeightMultiset p1p2 = tensor_weights(rs, v, scale_weights(v, 2));
  for (const auto& [w, m] : p1p2.mult) acc.add(w, -3 * m);
  const WeightMultiset p3 = scale_weights(v, 3);
  for (const auto& [w, m] : p3.mult) acc.add(w, 2 * m);
  WeightMultiset out;
  for (const auto& [w, m] : acc.mult) {
    if (m % 6 || m < 0) throw std::logic_error("exterior cube character not integral");
    out.add(w, m / 6);
  }
  return out;
}

WeightMultiset free_lie_module_weights(const RootSystem& rs, const WeightMultiset& v, int k) {
  if (k < 1) throw std::invalid_argument("free_lie_module_weights requires k >= 1");
  WeightMultiset acc;
  for (int t = 1; t <= k; ++t) {
    if (k % t) continue;
    const int mu = mobius(t);
    if (mu == 0) continue;
    WeightMultiset base = scale_weights(v, t);
    WeightMultiset pw;
    pw.add(WeightVec(rs.rank, 0), 1);
    for (int e = 0; e < k / t; ++e) pw = tensor_weights(rs, pw, base);
    for (const auto& [w, m] : pw.mult) acc.add(w, mu * m);
  }
  WeightMultiset out;
  for (const auto& [w, m] : acc.mult) {
    if (m % k || m < 0) throw std::logic_error("free Lie character not integral");
    out.add(w, m / k);
  }
  return out;
}

Integer weyl_dim_product(const std::vector<const RootSystem*>& parts, const WeightVec& lambda) {
  Integer d = 1;
  size_t off = 0;
  for (const RootSystem* rs : parts) {
    WeightVec slice(lambda.begin() + off, lambda.begin() + off + rs->rank);
    d *= weyl_dim(*rs, slice);
    off += rs->rank;
  }
  if (off != lambda.size()) throw std::invalid_argument("weight length mismatch");
  return d;
}

WeightMultiset freudenthal_weights_product(const std::vector<const RootSystem*>& parts,
                                           const WeightVec& lambda) {
  WeightMultiset acc;
  acc.add(WeightVec{}, 1);
  size_t off = 0;
  for (const RootSystem* rs : parts) {
    WeightVec slice(lambda.begin() + off, lambda.begin() + off + rs->rank);
    const WeightMultiset& part = freudenthal_weights(*rs, slice);
    WeightMultiset next;
    for (const auto& [w, m] : acc.mult)
      for (const auto& [pw, pm] : part.mult) {
        WeightVec join = w;
        join.insert(join.end(), pw.begin(), pw.end());
        next.add(join, m * pm);
      }
    acc = std::move(next);
    off += rs->rank;
  }
  if (off != lambda.size()) throw std::invalid_argument("weight length mismatch");
  return acc;
}

namespace {

Rational height_product(const std::vector<const RootSystem*>& parts, const WeightVec& w) {
  Rational h(0);
  size_t off = 0;
  for (const RootSystem* rs : parts) {
    for (int i = 0; i < rs->rank; ++i)
      if (w[off + i]) h += rs->level[i] * w[off + i];
    off += rs->rank;
  }
  return h;
}

}  // namespace

IrrepSum decompose_product(const std::vector<const RootSystem*>& parts,
                           const WeightMultiset& w) {
  auto working = w.mult;
  IrrepSum out;
  while (!working.empty()) {
    const WeightVec* best = nullptr;
    Rational best_h;
    for (const auto& [wv, m] : working) {
      Rational h = height_product(parts, wv);
      if (!best || h > best_h || (h == best_h && wv > *best)) {
        best = &wv;
        best_h = h;
      }
    }
    const WeightVec top = *best;
    const long long c = working.at(top);
    if (c < 0) throw NegativeMultiplicityError("negative multiplicity at " + irrep_label(top));
    for (int x : top)
      if (x < 0)
        throw NegativeMultiplicityError("maximal weight " + irrep_label(top) +
                                        " is not dominant; input is not a character");
    const WeightMultiset irr = freudenthal_weights_product(parts, top);
    for (const auto& [wv, m] : irr.mult) {
      auto it = working.find(wv);
      if (it == working.end() || it->second < c * m)
        throw NegativeMultiplicityError("subtracting " + irrep_label(top) +
                                        " drives a multiplicity negative");
      it->second -= c * m;
      if (it->second == 0) working.erase(it);
    }
    out[top] += c;
  }
  return out;
}

IrrepSum decompose(const RootSystem& rs, const WeightMultiset& w) {
  return decompose_product({&rs}, w);
}

std::string irrep_label(const WeightVec& w) {
  std::string body;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!body.empty()) body += "+";
    if (w[i] != 1) body += std::to_string(w[i]);
    body += "p" + std::to_string(i + 1);
  }
  if (body.empty()) body = "0";
  return "G(" + body + ")";
}

std::string irrep_sum_label(const IrrepSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [w, m] : s) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += irrep_label(w);
  }
  return out;
}

}  // namespace gnlat
