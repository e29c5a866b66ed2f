#pragma once

#include "gnlat/matrix.hpp"
#include "gnlat/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace gnlat {

// Weights are integer vectors in the fundamental-weight basis; roots are
// integer vectors in the simple-root basis. Simple roots follow Bourbaki's
// numeration throughout (0-based in code, 1-based in reports).
using WeightVec = std::vector<int>;

struct VecHash {
  size_t operator()(const WeightVec& v) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct WeightMultiset {
  std::unordered_map<WeightVec, long long, VecHash> mult;

  long long size() const {
    long long t = 0;
    for (const auto& [w, m] : mult) t += m;
    return t;
  }
  void add(const WeightVec& w, long long c) {
    if (c == 0) return;
    auto it = mult.find(w);
    if (it == mult.end()) {
      mult.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) mult.erase(it);
    }
  }
  long long at(const WeightVec& w) const {
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
  }
};

// Decomposition into irreducibles: dominant highest weight -> multiplicity.
using IrrepSum = std::map<WeightVec, long long>;

struct NegativeMultiplicityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class RootSystem {
 public:
  char series = 0;  // 'A'..'G'
  int rank = 0;

  std::vector<std::vector<int>> cartan;  // A[i][j] = 2(a_i,a_j)/(a_i,a_i)
  std::vector<int> sym;                  // d_i, with d_i A[i][j] symmetric
  std::vector<std::vector<int>> positive;        // root coords, (height, lex)
  std::vector<WeightVec> positive_weight;        // cartan * coords
  std::vector<int> positive_halfnorm;            // (a,a)/2
  std::vector<int> positive_height;              // sum of coords
  std::vector<Vec> inv_cartan;                   // rational inverse, columns
  Vec level;                                     // height functional on weights

  std::string name() const { return std::string(1, series) + std::to_string(rank); }

  WeightVec weight_of(const std::vector<int>& root_coords) const;
  Rational height(const WeightVec& w) const;
  bool is_dominant(const WeightVec& w) const;
  void reflect(WeightVec& w, int i) const;          // simple reflection s_i
  WeightVec dominantize(WeightVec w) const;
  bool is_positive_root(const std::vector<int>& coords) const;
  int root_index(const std::vector<int>& coords) const;  // -1 if absent

  // (w, root) under the invariant form, integral by the scaling of sym.
  long long form_weight_root(const WeightVec& w, const std::vector<int>& root_coords) const;
  // <w, root^vee>, exact integer
  long long coroot_pairing(const WeightVec& w, int positive_index) const;
  // root coordinates of a weight-lattice vector; throws if not in the
  // root lattice
  std::vector<int> root_coords_of_weight(const WeightVec& w) const;

 private:
  std::unordered_map<WeightVec, int, VecHash> index_;
  friend RootSystem build_root_system(char, int);
};

// Valid types: A(r>=1), B(r>=2), C(r>=3), D(r>=4), E(6..8), F(4), G(2).
RootSystem build_root_system(char series, int rank);

Integer weyl_dim(const RootSystem& rs, const WeightVec& lambda);

// Full weight multiset of the irreducible with highest weight lambda.
// Computed by the Freudenthal recursion over dominant weights, expanded
// along Weyl orbits; results are cached per (type, rank, lambda).
const WeightMultiset& freudenthal_weights(const RootSystem& rs, const WeightVec& lambda);

WeightMultiset scale_weights(const WeightMultiset& v, int t);
WeightMultiset tensor_weights(const RootSystem& rs, const WeightMultiset& a,
                              const WeightMultiset& b);
WeightMultiset exterior_square_weights(const RootSystem& rs, const WeightMultiset& v);
WeightMultiset exterior_cube_weights(const RootSystem& rs, const WeightMultiset& v);

// Character of the degree-k layer of the free Lie algebra on v.
WeightMultiset free_lie_module_weights(const RootSystem& rs, const WeightMultiset& v, int k);

IrrepSum decompose(const RootSystem& rs, const WeightMultiset& w);

// Product system on concatenated weight coordinates (used for reductive
// Levi factors with several simple components). An empty parts list means
// a torus: every weight must be the empty vector.
Integer weyl_dim_product(const std::vector<const RootSystem*>& parts, const WeightVec& lambda);
WeightMultiset freudenthal_weights_product(const std::vector<const RootSystem*>& parts,
                                           const WeightVec& lambda);
IrrepSum decompose_product(const std::vector<const RootSystem*>& parts, const WeightMultiset& w);

// "G(0)", "G(p1+2p3)" - stable text form of a highest weight.
std::string irrep_label(const WeightVec& w);
std::string irrep_sum_label(const IrrepSum& s);

}  // namespace gnlat
