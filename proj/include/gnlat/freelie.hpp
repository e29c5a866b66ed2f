#pragma once

#include "gnlat/gnla.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace gnlat {

// Letters 1..n packed in a byte string; lexicographic order on Word is the
// word order used everywhere.
using Word = std::string;

struct CapExceededError : GnlaError {
  using GnlaError::GnlaError;
};

// Dimension of the degree-k layer of the free Lie algebra on n generators.
long long witt_dim(int n, int k);

// Lyndon words of length 1..s, lexicographically sorted within each degree.
std::vector<std::vector<Word>> lyndon_words(int n, int s);

// Truncated free Lie algebra on the Lyndon basis. Brackets are computed by
// expanding basis elements into the free associative algebra and rewriting
// against the triangular Lyndon expansions.
class FreeTruncated {
 public:
  FreeTruncated(int n, int s, long long max_total_dim);

  int n() const { return n_; }
  int depth() const { return s_; }
  const Gnla& algebra() const { return algebra_; }
  const std::vector<std::vector<Word>>& words() const { return words_; }
  const Word& word(int layer, int pos) const { return words_[layer - 1][pos]; }
  int word_index(const Word& w) const;  // position within its degree, -1 if absent

  // Derivation extending E_ab (letters a, b, 1-based) restricted to layer k.
  // Column b is the image of the b-th basis word.
  const DenseMat& gl_action(int a, int b, int k) const;

  // Nullspace description of the isotypic piece of layer k for the sl(n)
  // highest weight `sl_weight` (fundamental coordinates, length n-1).
  std::vector<Vec> isotypic_component(int k, const std::vector<int>& sl_weight) const;

  // sl(n) weights (fundamental coordinates) of the basis words of layer k.
  std::vector<std::vector<int>> layer_weights(int k) const;

 private:
  int n_, s_;
  std::vector<std::vector<Word>> words_;
  std::unordered_map<Word, int> index_;
  Gnla algebra_;
  mutable std::vector<std::vector<DenseMat>> gl_;        // [k-1][(a-1)*n+(b-1)]
  mutable std::vector<DenseMat> casimir_;                // per layer, lazy
  const DenseMat& casimir(int k) const;
};

FreeTruncated free_truncated(int n, int s, long long max_total_dim = 5000);

// A quotient of a free algebra with its graded ideal tracked in the free
// Lyndon coordinates; this is the presentation the one-layer maximal
// extension consumes.
struct TrackedQuotient {
  int n = 0, s = 0;
  std::vector<std::vector<Vec>> ideal;  // canonical (RREF) rows per layer
  Gnla algebra;                         // carries the matching provenance block
  std::vector<std::vector<int>> kept;   // surviving Lyndon coordinates per layer
};

TrackedQuotient tracked_free(int n, int s, long long max_total_dim = 5000);
TrackedQuotient tracked_quotient(const FreeTruncated& f,
                                 const std::vector<std::vector<Vec>>& ideal,
                                 const std::string& name);
// Rebuild the tracked form from a stored provenance block.
TrackedQuotient from_provenance(const Provenance& p, const std::string& name,
                                long long max_total_dim = 5000);

// Lift a vector from quotient coordinates to free coordinates of layer k.
Vec lift_to_free(const TrackedQuotient& q, int layer, const Vec& v);

// f_{s+1}(n) / <ideal>, the universal one-layer-deeper extension.
TrackedQuotient maximal_extension(const TrackedQuotient& q, const std::string& name,
                                  long long max_total_dim = 5000);

}  // namespace gnlat
