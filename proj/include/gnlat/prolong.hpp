#pragma once

#include "gnlat/gnla.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gnlat {

// Grading-preserving derivation: one matrix per layer, columns are images
// of basis vectors.
struct Derivation {
  std::vector<DenseMat> layer;
};

struct DerivationLayer {
  std::vector<Derivation> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Degree-k prolongation element: u[j-1] maps layer j into the degree k-j
// space (a deeper layer of m, the chosen g0, or an earlier positive layer).
struct MapTuple {
  std::vector<DenseMat> u;
};

struct ProlongationLayer {
  int degree = 0;
  std::vector<MapTuple> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

enum class ProlongStatus { StabilizedAtZero, ReachedCap };

struct ProlongResult {
  std::vector<int> m_dims;
  int g0_dim = 0;
  bool g0_full = true;  // g0 = der0(m)
  std::vector<ProlongationLayer> layers;
  ProlongStatus status = ProlongStatus::ReachedCap;
  int stabilized_at = 0;  // first degree with a vanishing layer

  std::vector<int> layer_dims() const {
    std::vector<int> out;
    for (const auto& l : layers) out.push_back(l.dim());
    return out;
  }
  long long total_dim() const {
    long long t = g0_dim;
    for (int d : m_dims) t += d;
    for (const auto& l : layers) t += l.dim();
    return t;
  }
};

// All grading-preserving derivations, canonical nullspace basis of the
// Leibniz system.
DerivationLayer der0(const Gnla& m);

Derivation grading_element(const Gnla& m);

bool satisfies_leibniz(const Gnla& m, const Derivation& d);
bool derivation_in_span(const DerivationLayer& l, const Derivation& d);
Derivation commutator(const Derivation& a, const Derivation& b);

struct SubfreeReport {
  bool subfree = false;
  int n = 0;
  int der0_dim = 0;
  std::string reason;
};

// der0(m) is isomorphic to gl(n) iff its dimension is n^2: the restriction
// to degree -1 is injective for fundamental algebras.
SubfreeReport is_subfree(const Gnla& m);

// Positive Tanaka prolongation of (m, g0); g0 absent means der0(m). The
// engine needs bracket generation, so m must be fundamental. A supplied g0
// is checked to consist of derivations and to be closed under commutator.
ProlongResult prolong(const Gnla& m, const std::optional<DerivationLayer>& g0,
                      int max_degree);

inline int default_max_degree(const Gnla& m) { return 2 * m.depth() + 2; }

// Sub-ideal of g0 annihilating every layer below degree -1.
DerivationLayer h0_ideal(const Gnla& m, const DerivationLayer& g0);

struct RankOneReport {
  enum class Verdict { FiniteType, InfiniteType, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::string method;
  std::optional<Vec> witness;  // x in degree -1 with rank(ad_x) = 1
  std::string witness_note;
};

// Tiered finite-type decision. With no g0 the report concerns the full
// prolongation (rank-one adjoint criterion); with a g0 it concerns the
// pair (m, g0) via the h0 rank-one test. Verdicts are only emitted when
// exact: InfiniteType carries a certificate, FiniteType a vanishing or
// emptiness argument; everything else stays Unknown.
RankOneReport rank_one_analysis(const Gnla& m, const std::optional<DerivationLayer>& g0,
                                const ProlongResult* prior = nullptr);

// dim m + dim g0 + dim pr_+ for a stabilized prolongation.
long long symmetry_bound(const Gnla& m, const ProlongResult& pr);

// Adjoint action of a degree -1 vector on the whole algebra, as a matrix
// on flat coordinates.
RationalMatrix adjoint_matrix(const Gnla& m, const Vec& x);

}  // namespace gnlat
