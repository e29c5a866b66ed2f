#pragma once

#include "gnlat/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gnlat {

using Vec = std::vector<Rational>;

// Sorted (column, value) pairs; no stored value is zero.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Sparse matrix over Q with per-row sorted entries. The elimination
// routines below work fraction-free on gcd-normalized integer rows, so
// coefficient growth stays bounded even on the large derivation systems.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const SparseRow& row(int r) const { return data_[r]; }
  SparseRow& row(int r) { return data_[r]; }

  Rational get(int r, int c) const;
  void set(int r, int c, const Rational& v);

  long long nnz() const;

  Vec apply(const Vec& x) const;  // M x
  Vec row_dense(int r) const;

  static RationalMatrix from_dense(const std::vector<Vec>& rows, int cols);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseRow> data_;
};

// Accumulating builder; duplicate (r, c) contributions are summed.
class MatrixBuilder {
 public:
  MatrixBuilder(int rows, int cols) : rows_(rows), cols_(cols) {}
  void add(int r, int c, const Rational& v);
  int rows() const { return rows_; }
  RationalMatrix build();

 private:
  int rows_, cols_;
  std::vector<std::tuple<int, int, Rational>> entries_;
};

struct RrefResult {
  RationalMatrix matrix;    // the unique reduced row-echelon form
  std::vector<int> pivots;  // pivot column of each pivot row, increasing
  int rank = 0;
};

RrefResult rref(const RationalMatrix& m);
int rank(const RationalMatrix& m);

// Canonical basis of {v : Mv = 0}: one vector per free column, in
// increasing column order; the free coordinate is set to 1 and pivot
// coordinates are read off the RREF.
std::vector<Vec> nullspace(const RationalMatrix& m);

// Some x with Mx = b, free variables set to zero; nullopt if inconsistent.
std::optional<Vec> solve(const RationalMatrix& m, const Vec& b);

// RREF'd row space supporting reduction and membership queries.
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(const RationalMatrix& m);

  int dim() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return basis_.cols(); }
  const std::vector<int>& pivots() const { return pivots_; }
  const RationalMatrix& basis() const { return basis_; }

  // Subtracts the unique combination of basis rows that clears the pivot
  // coordinates of v; the residual is zero iff v lies in the span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;

 private:
  RationalMatrix basis_;
  std::vector<int> pivots_;
};

// Small dense helpers used for derivation/prolongation bases.
using DenseMat = std::vector<Vec>;  // row-major, rectangular

DenseMat dense_zero(int rows, int cols);
DenseMat dense_mul(const DenseMat& a, const DenseMat& b);
DenseMat dense_sub(const DenseMat& a, const DenseMat& b);
int dense_rank(const DenseMat& a);

}  // namespace gnlat
