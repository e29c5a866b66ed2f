#pragma once

#include "gnlat/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gnlat {

// Raw structure-constant data. Layers are numbered 1..s (layer k is the
// degree -k component); basis positions are 0-based here and 1-based in
// files. A bracket value is a list of (layer, coord, rational) components
// so that ill-graded data can be represented and then rejected by
// validate(); well-formed constructors always emit components in layer
// li + lj only.
struct RawValue {
  int layer = 0;
  int coord = 0;
  Rational value;
};

struct RawBracket {
  int li = 0, la = 0, lj = 0, lb = 0;
  std::vector<RawValue> value;
};

// Quotient-of-free provenance: the graded ideal is given by dense vectors
// in the Lyndon-basis coordinates of the free algebra layers.
struct Provenance {
  int n = 0, s = 0;
  std::vector<std::vector<Vec>> ideal;  // ideal[k-1]: vectors in layer k
};

// Grade-zero (Levi) action attached to a parabolic nilradical: one matrix
// per layer for each generator, closed under commutator.
struct LeviGenerator {
  std::string kind;               // "cartan" or "root"
  int node = 0;                   // 1-based ambient node, kind == "cartan"
  std::vector<int> root;          // signed simple-root coords, kind == "root"
  std::vector<RationalMatrix> matrices;
};

struct LeviComponentInfo {
  char series = 0;
  int rank = 0;
  std::vector<int> nodes;  // 1-based ambient nodes in Bourbaki order
};

struct LeviBlock {
  char series = 0;  // ambient simple algebra
  int rank = 0;
  std::vector<int> crossed;  // 1-based
  std::vector<LeviComponentInfo> components;
  std::vector<LeviGenerator> generators;
};

struct GnlaData {
  std::string name;
  std::string comment;
  std::vector<int> dims;
  std::vector<RawBracket> brackets;
  std::optional<Provenance> provenance;
  std::optional<LeviBlock> levi;
};

struct GnlaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAnIdealError : GnlaError {
  using GnlaError::GnlaError;
};
struct MeetsDegreeOneError : GnlaError {
  using GnlaError::GnlaError;
};

// A graded nilpotent Lie algebra by structure constants. Instances are
// immutable; all operations are value-level.
class Gnla {
 public:
  // Bounds- and convention-checks the data (canonical pair order, no
  // duplicates, components exactly in layer li+lj); throws GnlaError on
  // malformed input. Does not check the Jacobi identity; see validate().
  static Gnla from_data(const GnlaData& d);

  int depth() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  int layer_dim(int k) const { return k >= 1 && k <= depth() ? dims_[k - 1] : 0; }
  int total_dim() const { return offsets_.back(); }

  int flat_index(int layer, int pos) const { return offsets_[layer - 1] + pos; }
  std::pair<int, int> layer_pos(int flat) const;

  const std::string& name() const { return name_; }
  const std::string& comment() const { return comment_; }
  const std::optional<Provenance>& provenance() const { return provenance_; }
  const std::optional<LeviBlock>& levi() const { return levi_; }

  // Bracket of basis elements; dense coordinates in layer i+j. Empty
  // vector when i+j exceeds the depth.
  Vec bracket_basis(int i, int a, int j, int b) const;
  // Fast path: sparse value and sign, nullptr if the stored value is zero.
  const SparseRow* bracket_sparse(int i, int a, int j, int b, int& sign) const;
  // Bilinear extension; x dense in layer i, y dense in layer j.
  Vec bracket(int i, const Vec& x, int j, const Vec& y) const;

  GnlaData to_data() const;  // canonical (sorted, 0-based) raw form

  Gnla with_name(const std::string& n) const;
  Gnla with_provenance(Provenance p) const;
  Gnla with_levi(LeviBlock l) const;

 private:
  std::string name_, comment_;
  std::vector<int> dims_;
  std::vector<int> offsets_;
  std::optional<Provenance> provenance_;
  std::optional<LeviBlock> levi_;
  std::unordered_map<std::uint64_t, SparseRow> table_;

  static std::uint64_t key(int i, int a, int j, int b);
};

struct ValidationReport {
  bool structure_ok = false;
  bool grading_ok = false;
  bool jacobi_ok = false;
  std::string detail;  // first violation, human-readable
  std::optional<Gnla> algebra;
  bool ok() const { return structure_ok && grading_ok && jacobi_ok; }
};

ValidationReport validate(const GnlaData& d);

struct GradedSubspace {
  std::vector<std::vector<Vec>> layers;  // layers[k-1]: vectors in layer k
};

struct FundamentalReport {
  bool fundamental = false;
  bool generated = false;
  bool centerless_degree_one = false;
  std::string reason;
};

FundamentalReport is_fundamental(const Gnla& m);

// Graded basis of {x : [x, m] = 0}; canonical per layer.
GradedSubspace center(const Gnla& m);

struct BranchingReport {
  std::vector<int> ranks;  // rank of g_{-1} (x) g_{-k} -> g_{-k-1}, k = 1..s-1
  bool all_surjective = true;
  int first_failure = 0;  // layer k+1 that is not generated, 0 if none
};

BranchingReport check_branching(const Gnla& m);

struct QuotientResult {
  Gnla algebra;
  std::vector<std::vector<int>> kept;  // complement coordinates per old layer
};

// Quotient by a graded ideal h with h of degree <= -2. Throws
// MeetsDegreeOneError / NotAnIdealError. Trailing zero layers are
// trimmed, so the depth may drop.
QuotientResult quotient(const Gnla& m, const GradedSubspace& h, const std::string& new_name);

inline const std::vector<int>& growth_vector(const Gnla& m) { return m.dims(); }

// Deterministic content hash of dims + structure constants.
std::string algebra_hash(const Gnla& m);

}  // namespace gnlat
