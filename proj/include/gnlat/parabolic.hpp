#pragma once

#include "gnlat/gnla.hpp"
#include "gnlat/prolong.hpp"
#include "gnlat/rootsys.hpp"

#include <string>
#include <vector>

namespace gnlat {

// Chevalley structure constants with signs fixed by positivity on
// extraspecial pairs. Signed roots are encoded as +/-(index+1) into the
// positive-root list.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }

  // N_{a,b} for positive-root indices; 0 when the sum is not a root.
  long long n_pos(int a, int b) const;
  // N for arbitrary signed roots with x + y a nonzero root.
  long long n_signed(int x, int y) const;

  // Signed index of the sum, 0 if x + y is not a root (or is zero).
  int sum_root(int x, int y) const;
  // Coroot of a positive root in simple-coroot coordinates.
  std::vector<long long> coroot(int index) const;
  // <root(s), alpha_i^vee>, sign included.
  long long cartan_pairing(int s, int i) const;

  // Longest down-string length p (so |N| = p + 1 on special pairs).
  int string_down(int a, int b) const;

 private:
  RootSystem rs_;
  std::vector<std::vector<long long>> npos_;
};

// Exhaustive Jacobi check of the reconstructed algebra (Cartan plus all
// root vectors); integer arithmetic throughout.
bool chevalley_jacobi_exhaustive(const ChevalleyBasis& cb);

struct ParabolicGrading {
  RootSystem rs;
  std::vector<int> crossed;  // 1-based, sorted
  int depth = 0;
  std::vector<std::vector<int>> layer_roots;  // grade k -> positive root indices
  std::vector<int> growth;
  std::vector<LeviComponentInfo> levi;  // Bourbaki-relabelled components
  int center_dim = 0;                   // = |crossed|
  bool g0_is_gl = false;
  int gl_k = 0;
  std::string g0_desc;
  long long g0_dim = 0;  // rank + number of grade-0 roots
};

ParabolicGrading parabolic_grading(const RootSystem& rs, const std::vector<int>& crossed);

struct NilradicalResult {
  Gnla algebra;  // carries the levi block
  ParabolicGrading grading;
  bool abelian = false;  // depth 1
};

// The opposite nilradical of the parabolic as a GNLA on negative root
// vectors, with the grade-zero action attached.
NilradicalResult negative_nilradical(const RootSystem& rs, const std::vector<int>& crossed);

// Decomposition of the grade -k layer as a module over the semisimple
// Levi part, labelled in the components' own Bourbaki coordinates. Layer
// weights use the opposite-nilradical convention, under which the free
// algebra's degree -1 layer is the standard module.
IrrepSum layer_decomposition(const ParabolicGrading& pg, int k);

// Pretty label "G(p3)" contextualized over possibly several components.
std::string levi_irrep_label(const ParabolicGrading& pg, const WeightVec& w);

// The attached grade-zero action as prolongation input.
DerivationLayer levi_derivations(const LeviBlock& block);

}  // namespace gnlat
