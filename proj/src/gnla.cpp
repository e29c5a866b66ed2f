#include "gnlat/gnla.hpp"

#include <algorithm>
#include <set>

namespace gnlat {

namespace {

bool pair_before(int li, int la, int lj, int lb) {
  return li < lj || (li == lj && la < lb);
}

std::string pos_str(int layer, int pos) {
  return "(" + std::to_string(layer) + "," + std::to_string(pos + 1) + ")";
}

}  // namespace

std::uint64_t Gnla::key(int i, int a, int j, int b) {
  return (static_cast<std::uint64_t>(i) << 48) | (static_cast<std::uint64_t>(a) << 32) |
         (static_cast<std::uint64_t>(j) << 16) | static_cast<std::uint64_t>(b);
}

std::pair<int, int> Gnla::layer_pos(int flat) const {
  int layer = 1;
  while (flat >= offsets_[layer]) ++layer;
  return {layer, flat - offsets_[layer - 1]};
}

Gnla Gnla::from_data(const GnlaData& d) {
  Gnla g;
  g.name_ = d.name;
  g.comment_ = d.comment;
  g.dims_ = d.dims;
  g.provenance_ = d.provenance;
  g.levi_ = d.levi;
  if (g.dims_.empty()) throw GnlaError("algebra needs at least one layer");
  for (int dk : g.dims_)
    if (dk < 0) throw GnlaError("negative layer dimension");
  g.offsets_.assign(1, 0);
  for (int dk : g.dims_) g.offsets_.push_back(g.offsets_.back() + dk);

  const int s = g.depth();
  std::set<std::uint64_t> seen;
  for (const RawBracket& br : d.brackets) {
    if (br.li < 1 || br.li > s || br.lj < 1 || br.lj > s || br.la < 0 ||
        br.la >= g.dims_[br.li - 1] || br.lb < 0 || br.lb >= g.dims_[br.lj - 1])
      throw GnlaError("bracket pair out of range");
    if (!pair_before(br.li, br.la, br.lj, br.lb))
      throw GnlaError("bracket pair not in canonical order");
    if (!seen.insert(key(br.li, br.la, br.lj, br.lb)).second)
      throw GnlaError("duplicate bracket pair");
    const int target = br.li + br.lj;
    SparseRow row;
    for (const RawValue& rv : br.value) {
      if (is_zero(rv.value)) continue;
      if (rv.layer != target)
        throw GnlaError("bracket value outside layer " + std::to_string(target));
      if (target > s) throw GnlaError("bracket value beyond the depth");
      if (rv.coord < 0 || rv.coord >= g.dims_[target - 1])
        throw GnlaError("bracket value coordinate out of range");
      row.push_back({rv.coord, rv.value});
    }
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (size_t i = 0; i + 1 < row.size(); ++i)
      if (row[i].first == row[i + 1].first) throw GnlaError("duplicate value coordinate");
    if (!row.empty()) g.table_.emplace(key(br.li, br.la, br.lj, br.lb), std::move(row));
  }
  return g;
}

const SparseRow* Gnla::bracket_sparse(int i, int a, int j, int b, int& sign) const {
  if (i + j > depth()) return nullptr;
  sign = 1;
  if (!pair_before(i, a, j, b)) {
    if (i == j && a == b) return nullptr;
    std::swap(i, j);
    std::swap(a, b);
    sign = -1;
  }
  auto it = table_.find(key(i, a, j, b));
  return it == table_.end() ? nullptr : &it->second;
}

Vec Gnla::bracket_basis(int i, int a, int j, int b) const {
  if (i + j > depth()) return {};
  Vec out(dims_[i + j - 1], Rational(0));
  int sign = 1;
  if (const SparseRow* row = bracket_sparse(i, a, j, b, sign))
    for (const auto& [c, v] : *row) out[c] = sign > 0 ? v : -v;
  return out;
}

Vec Gnla::bracket(int i, const Vec& x, int j, const Vec& y) const {
  if (i + j > depth()) return {};
  Vec out(dims_[i + j - 1], Rational(0));
  for (int a = 0; a < dims_[i - 1]; ++a) {
    if (is_zero(x[a])) continue;
    for (int b = 0; b < dims_[j - 1]; ++b) {
      if (is_zero(y[b])) continue;
      int sign = 1;
      const SparseRow* row = bracket_sparse(i, a, j, b, sign);
      if (!row) continue;
      Rational coef = x[a] * y[b];
      if (sign < 0) coef = -coef;
      for (const auto& [c, v] : *row) out[c] += coef * v;
    }
  }
  return out;
}

GnlaData Gnla::to_data() const {
  GnlaData d;
  d.name = name_;
  d.comment = comment_;
  d.dims = dims_;
  d.provenance = provenance_;
  d.levi = levi_;
  std::vector<std::uint64_t> keys;
  keys.reserve(table_.size());
  for (const auto& [k, row] : table_) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (std::uint64_t k : keys) {
    RawBracket br;
    br.li = static_cast<int>(k >> 48);
    br.la = static_cast<int>((k >> 32) & 0xffff);
    br.lj = static_cast<int>((k >> 16) & 0xffff);
    br.lb = static_cast<int>(k & 0xffff);
    for (const auto& [c, v] : table_.at(k)) br.value.push_back({br.li + br.lj, c, v});
    d.brackets.push_back(std::move(br));
  }
  return d;
}

Gnla Gnla::with_name(const std::string& n) const {
  Gnla g = *this;
  g.name_ = n;
  return g;
}

Gnla Gnla::with_provenance(Provenance p) const {
  Gnla g = *this;
  g.provenance_ = std::move(p);
  return g;
}

Gnla Gnla::with_levi(LeviBlock l) const {
  Gnla g = *this;
  g.levi_ = std::move(l);
  return g;
}

ValidationReport validate(const GnlaData& d) {
  ValidationReport rep;

  // Structure: bounds, canonical order, duplicates.
  const int s = static_cast<int>(d.dims.size());
  if (s == 0) {
    rep.detail = "no layers";
    return rep;
  }
  std::set<std::tuple<int, int, int, int>> seen;
  for (const RawBracket& br : d.brackets) {
    if (br.li < 1 || br.li > s || br.lj < 1 || br.lj > s || br.la < 0 ||
        br.la >= d.dims[br.li - 1] || br.lb < 0 || br.lb >= d.dims[br.lj - 1]) {
      rep.detail = "bracket pair out of range";
      return rep;
    }
    if (!pair_before(br.li, br.la, br.lj, br.lb)) {
      rep.detail = "bracket pair " + pos_str(br.li, br.la) + pos_str(br.lj, br.lb) +
                   " not in canonical order";
      return rep;
    }
    if (!seen.insert({br.li, br.la, br.lj, br.lb}).second) {
      rep.detail = "duplicate bracket pair";
      return rep;
    }
    for (const RawValue& rv : br.value) {
      if (rv.layer < 1 || rv.layer > s || rv.coord < 0 || rv.coord >= d.dims[rv.layer - 1]) {
        rep.detail = "bracket value coordinate out of range";
        return rep;
      }
    }
  }
  rep.structure_ok = true;

  // Grading additivity: every nonzero component in layer li + lj <= s.
  for (const RawBracket& br : d.brackets) {
    for (const RawValue& rv : br.value) {
      if (is_zero(rv.value)) continue;
      if (br.li + br.lj > s || rv.layer != br.li + br.lj) {
        rep.detail = "grading violation at [" + pos_str(br.li, br.la) + "," +
                     pos_str(br.lj, br.lb) + "]: value in layer " + std::to_string(rv.layer) +
                     ", expected " + std::to_string(br.li + br.lj);
        return rep;
      }
    }
  }
  rep.grading_ok = true;

  Gnla g = Gnla::from_data(d);

  // Jacobi over all basis triples x < y < z in the flat order.
  const int n = g.total_dim();
  for (int xf = 0; xf < n; ++xf) {
    auto [i, a] = g.layer_pos(xf);
    for (int yf = xf + 1; yf < n; ++yf) {
      auto [j, b] = g.layer_pos(yf);
      if (i + j > g.depth()) break;  // layers only grow along the flat order
      for (int zf = yf + 1; zf < n; ++zf) {
        auto [k, c] = g.layer_pos(zf);
        if (i + j + k > g.depth()) break;
        Vec acc(g.layer_dim(i + j + k), Rational(0));
        auto add_term = [&](int p, int q, int r, int pa, int qa, int ra) {
          // [e_p, [e_q, e_r]]
          int sign = 1;
          const SparseRow* inner = g.bracket_sparse(q, qa, r, ra, sign);
          if (!inner) return;
          for (const auto& [t, v] : *inner) {
            int sign2 = 1;
            const SparseRow* outer = g.bracket_sparse(p, pa, q + r, t, sign2);
            if (!outer) continue;
            Rational coef = v;
            if (sign * sign2 < 0) coef = -coef;
            for (const auto& [u, w] : *outer) acc[u] += coef * w;
          }
        };
        add_term(i, j, k, a, b, c);
        add_term(j, k, i, b, c, a);
        add_term(k, i, j, c, a, b);
        for (const auto& q : acc) {
          if (!is_zero(q)) {
            rep.detail = "Jacobi fails at triple " + pos_str(i, a) + pos_str(j, b) +
                         pos_str(k, c);
            rep.algebra = std::move(g);
            return rep;
          }
        }
      }
    }
  }
  rep.jacobi_ok = true;
  rep.algebra = std::move(g);
  return rep;
}

FundamentalReport is_fundamental(const Gnla& m) {
  FundamentalReport rep;

  // Degree-1 elements of the center.
  GradedSubspace z = center(m);
  rep.centerless_degree_one = z.layers[0].empty();

  // Layer-by-layer generation by g_{-1}.
  rep.generated = true;
  std::vector<Vec> prev;  // spanning set of the generated part of layer k
  for (int a = 0; a < m.layer_dim(1); ++a) {
    Vec e(m.layer_dim(1), Rational(0));
    e[a] = 1;
    prev.push_back(std::move(e));
  }
  for (int k = 2; k <= m.depth(); ++k) {
    std::vector<Vec> next;
    Vec x(m.layer_dim(1), Rational(0));
    for (int a = 0; a < m.layer_dim(1); ++a) {
      x[a] = 1;
      for (const Vec& v : prev) next.push_back(m.bracket(1, x, k - 1, v));
      x[a] = 0;
    }
    RowSpace span(RationalMatrix::from_dense(next, m.layer_dim(k)));
    if (span.dim() < m.layer_dim(k)) {
      rep.generated = false;
      rep.reason = "layer " + std::to_string(k) + " is not bracket-generated (rank " +
                   std::to_string(span.dim()) + " of " + std::to_string(m.layer_dim(k)) + ")";
      break;
    }
    prev.clear();
    for (int a = 0; a < m.layer_dim(k); ++a) {
      Vec e(m.layer_dim(k), Rational(0));
      e[a] = 1;
      prev.push_back(std::move(e));
    }
  }

  rep.fundamental = rep.generated && rep.centerless_degree_one;
  if (rep.generated && !rep.centerless_degree_one)
    rep.reason = "central elements in degree -1";
  return rep;
}

GradedSubspace center(const Gnla& m) {
  GradedSubspace z;
  z.layers.resize(m.depth());
  for (int k = 1; k <= m.depth(); ++k) {
    // Equations [v, e_{j,b}] = 0 over all basis elements with k + j <= s.
    int eq = 0;
    for (int j = 1; k + j <= m.depth(); ++j) eq += m.layer_dim(j) * m.layer_dim(k + j);
    MatrixBuilder mb(eq, m.layer_dim(k));
    int row = 0;
    for (int j = 1; k + j <= m.depth(); ++j) {
      for (int b = 0; b < m.layer_dim(j); ++b) {
        for (int a = 0; a < m.layer_dim(k); ++a) {
          int sign = 1;
          const SparseRow* br = m.bracket_sparse(k, a, j, b, sign);
          if (!br) continue;
          for (const auto& [c, v] : *br) mb.add(row + c, a, sign > 0 ? v : -v);
        }
        row += m.layer_dim(k + j);
      }
    }
    z.layers[k - 1] = nullspace(mb.build());
  }
  return z;
}

BranchingReport check_branching(const Gnla& m) {
  BranchingReport rep;
  for (int k = 1; k < m.depth(); ++k) {
    std::vector<Vec> images;
    for (int a = 0; a < m.layer_dim(1); ++a)
      for (int b = 0; b < m.layer_dim(k); ++b) images.push_back(m.bracket_basis(1, a, k, b));
    int r = rank(RationalMatrix::from_dense(images, m.layer_dim(k + 1)));
    rep.ranks.push_back(r);
    if (r < m.layer_dim(k + 1) && rep.all_surjective) {
      rep.all_surjective = false;
      rep.first_failure = k + 1;
    }
  }
  return rep;
}

QuotientResult quotient(const Gnla& m, const GradedSubspace& h, const std::string& new_name) {
  const int s = m.depth();
  if (static_cast<int>(h.layers.size()) > s) throw GnlaError("subspace has too many layers");

  std::vector<RowSpace> spaces(s);
  for (int k = 1; k <= s; ++k) {
    std::vector<Vec> vs =
        k <= static_cast<int>(h.layers.size()) ? h.layers[k - 1] : std::vector<Vec>{};
    for (const Vec& v : vs)
      if (static_cast<int>(v.size()) != m.layer_dim(k))
        throw GnlaError("subspace vector has wrong length in layer " + std::to_string(k));
    spaces[k - 1] = RowSpace(RationalMatrix::from_dense(vs, m.layer_dim(k)));
  }
  if (spaces[0].dim() > 0) throw MeetsDegreeOneError("subspace meets degree -1");

  // Ideal test: [h, m] stays in h, layer by layer.
  for (int k = 2; k <= s; ++k) {
    for (int r = 0; r < spaces[k - 1].dim(); ++r) {
      Vec v = spaces[k - 1].basis().row_dense(r);
      for (int j = 1; k + j <= s; ++j) {
        for (int b = 0; b < m.layer_dim(j); ++b) {
          Vec y(m.layer_dim(j), Rational(0));
          y[b] = 1;
          Vec w = m.bracket(k, v, j, y);
          if (!spaces[k + j - 1].contains(w))
            throw NotAnIdealError("bracket of layer " + std::to_string(k) +
                                  " generator leaves the subspace in layer " +
                                  std::to_string(k + j));
        }
      }
    }
  }

  GnlaData d;
  d.name = new_name;
  std::vector<std::vector<int>> kept(s);
  std::vector<std::vector<int>> pos_of(s);  // old coord -> new coord or -1
  for (int k = 1; k <= s; ++k) {
    std::vector<bool> pivot(m.layer_dim(k), false);
    for (int p : spaces[k - 1].pivots()) pivot[p] = true;
    pos_of[k - 1].assign(m.layer_dim(k), -1);
    for (int c = 0; c < m.layer_dim(k); ++c)
      if (!pivot[c]) {
        pos_of[k - 1][c] = static_cast<int>(kept[k - 1].size());
        kept[k - 1].push_back(c);
      }
    d.dims.push_back(static_cast<int>(kept[k - 1].size()));
  }
  int new_depth = s;
  while (new_depth > 1 && d.dims[new_depth - 1] == 0) --new_depth;
  d.dims.resize(new_depth);

  for (int i = 1; i <= new_depth; ++i) {
    for (int j = i; j <= new_depth; ++j) {
      if (i + j > new_depth) continue;
      for (size_t a = 0; a < kept[i - 1].size(); ++a) {
        for (size_t b = (i == j ? a + 1 : 0); b < kept[j - 1].size(); ++b) {
          Vec w = m.bracket_basis(i, kept[i - 1][a], j, kept[j - 1][b]);
          w = spaces[i + j - 1].reduce(std::move(w));
          RawBracket br;
          br.li = i;
          br.la = static_cast<int>(a);
          br.lj = j;
          br.lb = static_cast<int>(b);
          for (int c = 0; c < static_cast<int>(w.size()); ++c)
            if (!is_zero(w[c])) {
              if (pos_of[i + j - 1][c] < 0)
                throw GnlaError("reduction left a pivot coordinate");
              br.value.push_back({i + j, pos_of[i + j - 1][c], w[c]});
            }
          if (!br.value.empty()) d.brackets.push_back(std::move(br));
        }
      }
    }
  }
  return QuotientResult{Gnla::from_data(d), std::move(kept)};
}

std::string algebra_hash(const Gnla& m) {
  std::string text;
  for (int dk : m.dims()) text += std::to_string(dk) + ",";
  GnlaData d = m.to_data();
  for (const RawBracket& br : d.brackets) {
    text += "[" + std::to_string(br.li) + "." + std::to_string(br.la) + "," +
            std::to_string(br.lj) + "." + std::to_string(br.lb) + "]=";
    for (const RawValue& rv : br.value)
      text += std::to_string(rv.coord) + ":" + rat_str(rv.value) + ";";
  }
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gnlat
