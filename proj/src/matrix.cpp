#include "gnlat/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gnlat {

Rational RationalMatrix::get(int r, int c) const {
  const SparseRow& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rational(0);
}

void RationalMatrix::set(int r, int c, const Rational& v) {
  SparseRow& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (is_zero(v))
      row.erase(it);
    else
      it->second = v;
  } else if (!is_zero(v)) {
    row.insert(it, {c, v});
  }
}

long long RationalMatrix::nnz() const {
  long long n = 0;
  for (const auto& r : data_) n += static_cast<long long>(r.size());
  return n;
}

Vec RationalMatrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("RationalMatrix::apply: dimension mismatch");
  Vec out(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r] += v * x[c];
  return out;
}

Vec RationalMatrix::row_dense(int r) const {
  Vec out(cols_, Rational(0));
  for (const auto& [c, v] : data_[r]) out[c] = v;
  return out;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<Vec>& rows, int cols) {
  RationalMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < cols; ++c)
      if (!is_zero(rows[r][c])) m.row(r).push_back({c, rows[r][c]});
  return m;
}

void MatrixBuilder::add(int r, int c, const Rational& v) {
  if (is_zero(v)) return;
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("MatrixBuilder::add: index out of range");
  entries_.emplace_back(r, c, v);
}

RationalMatrix MatrixBuilder::build() {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) {
              if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
              return std::get<1>(a) < std::get<1>(b);
            });
  RationalMatrix m(rows_, cols_);
  for (size_t i = 0; i < entries_.size();) {
    size_t j = i;
    Rational sum(0);
    while (j < entries_.size() && std::get<0>(entries_[j]) == std::get<0>(entries_[i]) &&
           std::get<1>(entries_[j]) == std::get<1>(entries_[i])) {
      sum += std::get<2>(entries_[j]);
      ++j;
    }
    if (!is_zero(sum)) m.row(std::get<0>(entries_[i])).push_back({std::get<1>(entries_[i]), sum});
    i = j;
  }
  return m;
}

namespace {

// Integer row with gcd 1 across entries; sorted by column.
using IRow = std::vector<std::pair<int, Integer>>;

IRow to_integer_row(const SparseRow& row) {
  IRow out;
  if (row.empty()) return out;
  Integer l = 1;
  for (const auto& [c, v] : row) l = lcm(l, Integer(v.get_den()));
  Integer g = 0;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    Integer e = Integer(v.get_num()) * (l / v.get_den());
    g = gcd(g, e);
    out.push_back({c, e});
  }
  if (g > 1)
    for (auto& [c, e] : out) e /= g;
  return out;
}

void normalize_content(IRow& r) {
  Integer g = 0;
  for (const auto& [c, e] : r) {
    g = gcd(g, e);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, e] : r) e /= g;
}

// target := a*target - b*pivot, content-normalized. a = pivot lead, b =
// target entry at the pivot column.
IRow eliminate(const IRow& target, const IRow& pivot, const Integer& a, const Integer& b) {
  IRow out;
  out.reserve(target.size() + pivot.size());
  size_t i = 0, j = 0;
  Integer val;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back({target[i].first, a * target[i].second});
      ++i;
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.push_back({pivot[j].first, -b * pivot[j].second});
      ++j;
    } else {
      val = a * target[i].second - b * pivot[j].second;
      if (val != 0) out.push_back({target[i].first, val});
      ++i;
      ++j;
    }
  }
  normalize_content(out);
  return out;
}

struct Echelon {
  std::vector<IRow> rows;    // one per pivot, pivot columns increasing
  std::vector<int> pivots;
};

// Forward elimination. Column order is fixed (left to right) so the final
// reduced form is the canonical RREF; within a column the sparsest row is
// chosen as pivot, which does not affect the result.
Echelon forward_eliminate(const RationalMatrix& m) {
  std::map<int, std::vector<IRow>> buckets;
  for (int r = 0; r < m.rows(); ++r) {
    IRow ir = to_integer_row(m.row(r));
    if (!ir.empty()) buckets[ir.front().first].push_back(std::move(ir));
  }
  Echelon ech;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    int col = node.key();
    std::vector<IRow>& rows = node.mapped();
    size_t best = 0;
    for (size_t i = 1; i < rows.size(); ++i)
      if (rows[i].size() < rows[best].size()) best = i;
    IRow pivot = std::move(rows[best]);
    const Integer a = pivot.front().second;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == best) continue;
      IRow reduced = eliminate(rows[i], pivot, a, rows[i].front().second);
      if (!reduced.empty()) buckets[reduced.front().first].push_back(std::move(reduced));
    }
    ech.pivots.push_back(col);
    ech.rows.push_back(std::move(pivot));
  }
  return ech;
}

RrefResult finish_rref(Echelon ech, int rows_out, int cols) {
  const int rank = static_cast<int>(ech.pivots.size());
  // Clear pivot columns upward, bottom pivot first.
  for (int i = rank - 1; i >= 0; --i) {
    const int pc = ech.pivots[i];
    const Integer a = ech.rows[i].front().second;
    for (int j = 0; j < i; ++j) {
      auto it = std::lower_bound(ech.rows[j].begin(), ech.rows[j].end(), pc,
                                 [](const auto& e, int col) { return e.first < col; });
      if (it != ech.rows[j].end() && it->first == pc)
        ech.rows[j] = eliminate(ech.rows[j], ech.rows[i], a, it->second);
    }
  }
  RrefResult res;
  res.rank = rank;
  res.pivots = std::move(ech.pivots);
  res.matrix = RationalMatrix(rows_out, cols);
  for (int i = 0; i < rank; ++i) {
    const Rational lead(ech.rows[i].front().second);
    SparseRow& out = res.matrix.row(i);
    out.reserve(ech.rows[i].size());
    for (const auto& [c, e] : ech.rows[i]) {
      Rational q(e);
      q /= lead;
      out.push_back({c, q});
    }
  }
  return res;
}

}  // namespace

RrefResult rref(const RationalMatrix& m) {
  return finish_rref(forward_eliminate(m), m.rows(), m.cols());
}

int rank(const RationalMatrix& m) {
  return static_cast<int>(forward_eliminate(m).pivots.size());
}

std::vector<Vec> nullspace(const RationalMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Rational(0));
    v[f] = 1;
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.matrix.get(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const RationalMatrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("solve: right-hand side has wrong length");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    aug.row(r) = m.row(r);
    if (!is_zero(b[r])) aug.row(r).push_back({m.cols(), b[r]});
  }
  RrefResult rr = rref(aug);
  Vec x(m.cols(), Rational(0));
  for (int i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;
    x[rr.pivots[i]] = rr.matrix.get(i, m.cols());
  }
  return x;
}

RowSpace::RowSpace(const RationalMatrix& m) {
  RrefResult r = rref(m);
  pivots_ = r.pivots;
  basis_ = RationalMatrix(r.rank, m.cols());
  for (int i = 0; i < r.rank; ++i) basis_.row(i) = r.matrix.row(i);
}

Vec RowSpace::reduce(Vec v) const {
  for (int i = 0; i < dim(); ++i) {
    const Rational& coef = v[pivots_[i]];
    if (is_zero(coef)) continue;
    Rational c = coef;
    for (const auto& [col, val] : basis_.row(i)) v[col] -= c * val;
  }
  return v;
}

bool RowSpace::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (const auto& q : r)
    if (!is_zero(q)) return false;
  return true;
}

DenseMat dense_zero(int rows, int cols) {
  return DenseMat(rows, Vec(cols, Rational(0)));
}

DenseMat dense_mul(const DenseMat& a, const DenseMat& b) {
  const int n = static_cast<int>(a.size());
  const int k = n ? static_cast<int>(a[0].size()) : 0;
  const int m = b.empty() ? 0 : static_cast<int>(b[0].size());
  DenseMat out = dense_zero(n, m);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (is_zero(a[i][t])) continue;
      for (int j = 0; j < m; ++j)
        if (!is_zero(b[t][j])) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

DenseMat dense_sub(const DenseMat& a, const DenseMat& b) {
  DenseMat out = a;
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

int dense_rank(const DenseMat& a) {
  if (a.empty()) return 0;
  return rank(RationalMatrix::from_dense(a, static_cast<int>(a[0].size())));
}

}  // namespace gnlat
