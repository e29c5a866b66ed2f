#include "gnlat/freelie.hpp"

#include <algorithm>
#include <map>

namespace gnlat {

namespace {

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

long long witt_dim(int n, int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("witt_dim requires n >= 2, k >= 1");
  Integer sum = 0;
  for (int t = 1; t <= k; ++t) {
    if (k % t) continue;
    const int mu = mobius(t);
    if (mu == 0) continue;
    Integer pw = 1;
    for (int e = 0; e < k / t; ++e) pw *= n;
    sum += mu * pw;
  }
  sum /= k;
  if (!sum.fits_slong_p()) throw std::overflow_error("witt_dim overflow");
  return sum.get_si();
}

std::vector<std::vector<Word>> lyndon_words(int n, int s) {
  std::vector<std::vector<Word>> out(s);
  // Duval's generation in lexicographic order.
  Word w(1, char(1));
  while (true) {
    out[w.size() - 1].push_back(w);
    Word ext;  // periodic extension to the maximal length
    for (int i = 0; i < s; ++i) ext.push_back(w[i % w.size()]);
    w = std::move(ext);
    while (!w.empty() && w.back() == char(n)) w.pop_back();
    if (w.empty()) break;
    w.back() = char(w.back() + 1);
  }
  return out;
}

namespace {

// Standard factorization: the right factor is the lexicographically
// smallest proper suffix.
std::pair<Word, Word> standard_factorization(const Word& w) {
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i)
    if (w.compare(i, Word::npos, w, best, Word::npos) < 0) best = i;
  return {w.substr(0, best), w.substr(best)};
}

using Poly = std::map<Word, Integer>;  // free associative algebra, lex-keyed

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Integer& t = out[wa + wb];
      t += ca * cb;
      if (t == 0) out.erase(wa + wb);
    }
  return out;
}

Poly poly_bracket(const Poly& a, const Poly& b) {
  Poly out = poly_mul(a, b);
  for (const auto& [w, c] : poly_mul(b, a)) {
    Integer& t = out[w];
    t -= c;
    if (t == 0) out.erase(w);
  }
  return out;
}

}  // namespace

FreeTruncated::FreeTruncated(int n, int s, long long max_total_dim) : n_(n), s_(s) {
  if (n < 2 || s < 1) throw std::invalid_argument("free algebra requires n >= 2, s >= 1");
  long long total = 0;
  for (int k = 1; k <= s; ++k) total += witt_dim(n, k);
  if (total > max_total_dim)
    throw CapExceededError("total dimension " + std::to_string(total) +
                           " exceeds the cap " + std::to_string(max_total_dim));

  words_ = lyndon_words(n, s);
  for (int k = 1; k <= s; ++k) {
    if (static_cast<long long>(words_[k - 1].size()) != witt_dim(n, k))
      throw std::logic_error("Lyndon count disagrees with the Witt number");
    for (size_t i = 0; i < words_[k - 1].size(); ++i)
      index_[words_[k - 1][i]] = static_cast<int>(i);
  }

  // Triangular expansions of the Lyndon bracketings.
  std::unordered_map<Word, Poly> expansion;
  for (int k = 1; k <= s; ++k)
    for (const Word& w : words_[k - 1]) {
      if (k == 1) {
        expansion[w] = Poly{{w, Integer(1)}};
        continue;
      }
      auto [u, v] = standard_factorization(w);
      expansion[w] = poly_bracket(expansion.at(u), expansion.at(v));
      if (expansion[w].begin()->first != w || expansion[w].begin()->second != 1)
        throw std::logic_error("expansion is not unitriangular");
    }

  // Rewrite a homogeneous Lie element against the expansions; the least
  // word of a Lie element is Lyndon, which drives the elimination.
  auto rewrite = [&](Poly p) {
    SparseRow out;
    while (!p.empty()) {
      const Word lw = p.begin()->first;
      const Integer c = p.begin()->second;
      auto it = index_.find(lw);
      if (it == index_.end()) throw std::logic_error("leading word is not Lyndon");
      out.push_back({it->second, Rational(c)});
      for (const auto& [w, e] : expansion.at(lw)) {
        Integer& t = p[w];
        t -= c * e;
        if (t == 0) p.erase(w);
      }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  };

  GnlaData d;
  d.name = "f" + std::to_string(s) + "_" + std::to_string(n);
  for (int k = 1; k <= s; ++k) d.dims.push_back(static_cast<int>(words_[k - 1].size()));
  for (int i = 1; i <= s; ++i) {
    for (int j = i; j <= s; ++j) {
      if (i + j > s) continue;
      for (size_t a = 0; a < words_[i - 1].size(); ++a) {
        for (size_t b = (i == j ? a + 1 : 0); b < words_[j - 1].size(); ++b) {
          Poly p = poly_bracket(expansion.at(words_[i - 1][a]), expansion.at(words_[j - 1][b]));
          SparseRow row = rewrite(std::move(p));
          if (row.empty()) continue;
          RawBracket br;
          br.li = i;
          br.la = static_cast<int>(a);
          br.lj = j;
          br.lb = static_cast<int>(b);
          for (const auto& [c, v] : row) br.value.push_back({i + j, c, v});
          d.brackets.push_back(std::move(br));
        }
      }
    }
  }
  algebra_ = Gnla::from_data(d);

  // Derivations extending the elementary matrices, degree by degree.
  gl_.assign(s, std::vector<DenseMat>(n * n));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      const int g = (a - 1) * n + (b - 1);
      for (int k = 1; k <= s; ++k) {
        const int dk = static_cast<int>(words_[k - 1].size());
        gl_[k - 1][g] = dense_zero(dk, dk);
      }
      // degree 1: E_ab e_c = delta_bc e_a
      gl_[0][g][a - 1][b - 1] = 1;
      for (int k = 2; k <= s; ++k) {
        for (size_t pos = 0; pos < words_[k - 1].size(); ++pos) {
          auto [u, v] = standard_factorization(words_[k - 1][pos]);
          const int ku = static_cast<int>(u.size());
          const int kv = static_cast<int>(v.size());
          Vec du(words_[ku - 1].size(), Rational(0));
          Vec dv(words_[kv - 1].size(), Rational(0));
          for (size_t t = 0; t < du.size(); ++t) du[t] = gl_[ku - 1][g][t][index_.at(u)];
          for (size_t t = 0; t < dv.size(); ++t) dv[t] = gl_[kv - 1][g][t][index_.at(v)];
          Vec ev(words_[kv - 1].size(), Rational(0));
          ev[index_.at(v)] = 1;
          Vec eu(words_[ku - 1].size(), Rational(0));
          eu[index_.at(u)] = 1;
          Vec img = algebra_.bracket(ku, du, kv, ev);
          Vec img2 = algebra_.bracket(ku, eu, kv, dv);
          for (size_t t = 0; t < img.size(); ++t)
            gl_[k - 1][g][t][pos] = img[t] + img2[t];
        }
      }
    }
  casimir_.assign(s, DenseMat{});
}

int FreeTruncated::word_index(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

const DenseMat& FreeTruncated::gl_action(int a, int b, int k) const {
  return gl_[k - 1][(a - 1) * n_ + (b - 1)];
}

const DenseMat& FreeTruncated::casimir(int k) const {
  DenseMat& c = casimir_[k - 1];
  if (!c.empty() || words_[k - 1].empty()) return c;
  const int dk = static_cast<int>(words_[k - 1].size());
  c = dense_zero(dk, dk);
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b) {
      DenseMat prod = dense_mul(gl_action(a, b, k), gl_action(b, a, k));
      for (int i = 0; i < dk; ++i)
        for (int j = 0; j < dk; ++j) c[i][j] += prod[i][j];
    }
  return c;
}

std::vector<Vec> FreeTruncated::isotypic_component(int k, const std::vector<int>& sl) const {
  if (static_cast<int>(sl.size()) != n_ - 1)
    throw std::invalid_argument("weight has wrong rank");
  // gl(n) highest weight with row sums k: a_i = a_n + sum_{j>=i} sl_j.
  long long shift = 0;
  for (int j = 0; j < n_ - 1; ++j) shift += static_cast<long long>(j + 1) * sl[j];
  if ((k - shift) % n_) return {};
  const long long an = (k - shift) / n_;
  std::vector<long long> a(n_, an);
  for (int i = n_ - 2; i >= 0; --i) a[i] = a[i + 1] + sl[i];
  long long eigen = 0;
  for (int i = 0; i < n_; ++i) eigen += a[i] * (a[i] + n_ + 1 - 2 * (i + 1));

  const DenseMat& cas = casimir(k);
  const int dk = static_cast<int>(words_[k - 1].size());
  DenseMat m = cas;
  for (int i = 0; i < dk; ++i) m[i][i] -= rat(static_cast<long>(eigen));
  return nullspace(RationalMatrix::from_dense(m, dk));
}

std::vector<std::vector<int>> FreeTruncated::layer_weights(int k) const {
  std::vector<std::vector<int>> out;
  for (const Word& w : words_[k - 1]) {
    std::vector<int> count(n_, 0);
    for (char ch : w) ++count[ch - 1];
    std::vector<int> sl(n_ - 1);
    for (int i = 0; i < n_ - 1; ++i) sl[i] = count[i] - count[i + 1];
    out.push_back(std::move(sl));
  }
  return out;
}

FreeTruncated free_truncated(int n, int s, long long max_total_dim) {
  return FreeTruncated(n, s, max_total_dim);
}

namespace {

Provenance make_provenance(int n, int s, const std::vector<std::vector<Vec>>& ideal) {
  Provenance p;
  p.n = n;
  p.s = s;
  p.ideal = ideal;
  p.ideal.resize(s);
  return p;
}

}  // namespace

TrackedQuotient tracked_free(int n, int s, long long max_total_dim) {
  FreeTruncated f(n, s, max_total_dim);
  TrackedQuotient q;
  q.n = n;
  q.s = s;
  q.ideal.resize(s);
  q.algebra = f.algebra().with_provenance(make_provenance(n, s, q.ideal));
  q.kept.resize(s);
  for (int k = 1; k <= s; ++k)
    for (size_t c = 0; c < f.words()[k - 1].size(); ++c)
      q.kept[k - 1].push_back(static_cast<int>(c));
  return q;
}

TrackedQuotient tracked_quotient(const FreeTruncated& f,
                                 const std::vector<std::vector<Vec>>& ideal,
                                 const std::string& name) {
  const int s = f.depth();
  GradedSubspace h;
  h.layers = ideal;
  h.layers.resize(s);
  // Canonicalize the stored ideal: RREF rows per layer.
  std::vector<std::vector<Vec>> canonical(s);
  for (int k = 1; k <= s; ++k) {
    RowSpace rs(RationalMatrix::from_dense(h.layers[k - 1],
                                           static_cast<int>(f.words()[k - 1].size())));
    for (int r = 0; r < rs.dim(); ++r) canonical[k - 1].push_back(rs.basis().row_dense(r));
  }
  QuotientResult qr = quotient(f.algebra(), h, name);
  TrackedQuotient q;
  q.n = f.n();
  q.s = s;
  q.ideal = canonical;
  q.kept = qr.kept;
  q.kept.resize(s);
  q.algebra = qr.algebra.with_provenance(make_provenance(f.n(), s, canonical));
  return q;
}

TrackedQuotient from_provenance(const Provenance& p, const std::string& name,
                                long long max_total_dim) {
  FreeTruncated f(p.n, p.s, max_total_dim);
  return tracked_quotient(f, p.ideal, name);
}

Vec lift_to_free(const TrackedQuotient& q, int layer, const Vec& v) {
  const std::vector<int>& kept = q.kept[layer - 1];
  if (v.size() != kept.size()) throw std::invalid_argument("lift: wrong length");
  long long free_dim = witt_dim(q.n, layer);
  Vec out(static_cast<size_t>(free_dim), Rational(0));
  for (size_t c = 0; c < kept.size(); ++c) out[kept[c]] = v[c];
  return out;
}

TrackedQuotient maximal_extension(const TrackedQuotient& q, const std::string& name,
                                  long long max_total_dim) {
  FreeTruncated f(q.n, q.s + 1, max_total_dim);
  std::vector<std::vector<Vec>> ideal = q.ideal;
  ideal.resize(q.s + 1);
  // The ideal generated in one extra degree: brackets of the generators
  // with the current top-layer part.
  for (const Vec& v : q.ideal[q.s - 1]) {
    for (int l = 0; l < q.n; ++l) {
      Vec e(q.n, Rational(0));
      e[l] = 1;
      ideal[q.s].push_back(f.algebra().bracket(1, e, q.s, v));
    }
  }
  return tracked_quotient(f, ideal, name);
}

}  // namespace gnlat
