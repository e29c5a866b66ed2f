#include "gnlat/report.hpp"

#include "gnlat/freelie.hpp"
#include "gnlat/parabolic.hpp"

#include <algorithm>

namespace gnlat {

namespace {

Json rational_vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rat_str(q));
  return out;
}

}  // namespace

Json irrep_sum_to_json(const IrrepSum& s) {
  Json out = Json::array();
  for (const auto& [w, m] : s)
    out.push_back(Json{{"weight", w}, {"mult", m}, {"label", irrep_label(w)}});
  return out;
}

Json check_report(const GnlaData& data) {
  Json j;
  j["name"] = data.name;
  j["dims"] = data.dims;
  ValidationReport rep = validate(data);
  j["validation"] = Json{{"structure", rep.structure_ok},
                         {"grading", rep.grading_ok},
                         {"jacobi", rep.jacobi_ok},
                         {"detail", rep.detail}};
  if (!rep.ok()) return j;
  const Gnla& m = *rep.algebra;
  j["hash"] = algebra_hash(m);
  j["growth"] = growth_vector(m);
  FundamentalReport f = is_fundamental(m);
  j["fundamental"] = Json{{"value", f.fundamental},
                          {"generated", f.generated},
                          {"centerless_degree_one", f.centerless_degree_one},
                          {"reason", f.reason}};
  SubfreeReport sf = is_subfree(m);
  j["subfree"] = Json{{"value", sf.subfree},
                      {"n", sf.n},
                      {"der0_dim", sf.der0_dim},
                      {"reason", sf.reason}};
  return j;
}

namespace {

Json rank_one_json(const RankOneReport& rr) {
  Json j;
  switch (rr.verdict) {
    case RankOneReport::Verdict::FiniteType:
      j["verdict"] = "finite";
      break;
    case RankOneReport::Verdict::InfiniteType:
      j["verdict"] = "infinite";
      break;
    default:
      j["verdict"] = "unknown";
  }
  j["method"] = rr.method;
  j["witness"] = rr.witness ? rational_vec_json(*rr.witness) : Json();
  if (!rr.witness_note.empty()) j["witness_note"] = rr.witness_note;
  return j;
}

}  // namespace

Json prolong_report(const Gnla& m, const std::optional<DerivationLayer>& g0, int max_degree) {
  ProlongResult pr = prolong(m, g0, max_degree);
  Json j;
  j["hash"] = algebra_hash(m);
  const int n = m.layer_dim(1);
  j["g0"] = Json{{"dim", pr.g0_dim},
                 {"full", pr.g0_full},
                 {"is_n_squared", pr.g0_dim == n * n}};
  j["max_degree"] = max_degree;
  j["layers"] = pr.layer_dims();
  j["status"] =
      pr.status == ProlongStatus::StabilizedAtZero ? "stabilized_at_zero" : "reached_cap";
  j["stabilized_at"] = pr.stabilized_at;
  j["rank_one"] = rank_one_json(rank_one_analysis(m, g0, &pr));
  if (pr.status == ProlongStatus::StabilizedAtZero)
    j["symmetry_bound"] = symmetry_bound(m, pr);
  return j;
}

Json ranktest_report(const Gnla& m, const std::optional<DerivationLayer>& g0) {
  Json j;
  j["hash"] = algebra_hash(m);
  j["rank_one"] = rank_one_json(rank_one_analysis(m, g0, nullptr));
  return j;
}

Json witt_report(int n, int upto) {
  Json j;
  j["n"] = n;
  j["upto"] = upto;
  std::vector<long long> dims;
  for (int k = 1; k <= upto; ++k) dims.push_back(witt_dim(n, k));
  j["dims"] = dims;
  return j;
}

Json parabolic_report(char series, int rank, const std::vector<int>& crossed) {
  RootSystem rs = build_root_system(series, rank);
  ParabolicGrading pg = parabolic_grading(rs, crossed);
  Json j;
  j["type"] = std::string(1, series) + std::to_string(rank);
  j["crossed"] = pg.crossed;
  j["depth"] = pg.depth;
  j["growth"] = pg.growth;
  Json levi = Json::array();
  for (const auto& comp : pg.levi)
    levi.push_back(Json{{"series", std::string(1, comp.series)},
                        {"rank", comp.rank},
                        {"nodes", comp.nodes}});
  j["g0"] = Json{{"description", pg.g0_desc},
                 {"dim", pg.g0_dim},
                 {"is_gl", pg.g0_is_gl},
                 {"gl_k", pg.gl_k},
                 {"center_dim", pg.center_dim},
                 {"levi", std::move(levi)}};
  Json layers = Json::array();
  for (int k = 1; k <= pg.depth; ++k) {
    IrrepSum dec = layer_decomposition(pg, k);
    Json mods = Json::array();
    for (const auto& [w, mult] : dec)
      mods.push_back(Json{{"weight", w}, {"mult", mult}, {"label", levi_irrep_label(pg, w)}});
    layers.push_back(Json{{"degree", -k}, {"dim", pg.growth[k - 1]}, {"modules", mods}});
  }
  j["layers"] = std::move(layers);
  return j;
}

Json decompose_report(const GnlaData& data, char series, int rank) {
  Gnla m = Gnla::from_data(data);
  RootSystem rs = build_root_system(series, rank);
  std::vector<std::vector<WeightVec>> weights(m.depth());

  if (m.provenance()) {
    const Provenance& p = *m.provenance();
    if (series != 'A' || rank != p.n - 1)
      throw SpecFileError("provenance requires decomposition over A" +
                          std::to_string(p.n - 1));
    FreeTruncated f(p.n, p.s, 1 << 20);
    TrackedQuotient q = tracked_quotient(f, p.ideal, data.name);
    if (q.algebra.dims() != m.dims())
      throw SpecFileError("provenance does not reproduce the stored algebra");
    for (int k = 1; k <= m.depth(); ++k) {
      auto fw = f.layer_weights(k);
      for (int c : q.kept[k - 1]) weights[k - 1].push_back(fw[c]);
    }
  } else if (m.levi()) {
    const LeviBlock& block = *m.levi();
    if (block.components.size() != 1)
      throw SpecFileError("decompose needs a single Levi component");
    const LeviComponentInfo& comp = block.components[0];
    if (comp.series != series || comp.rank != rank)
      throw SpecFileError("algebra carries a " + std::string(1, comp.series) +
                          std::to_string(comp.rank) + " Levi action");
    for (int k = 1; k <= m.depth(); ++k) {
      for (int p = 0; p < m.layer_dim(k); ++p) weights[k - 1].push_back(WeightVec());
      for (int node : comp.nodes) {
        // locate the cartan generator of this node
        const LeviGenerator* gen = nullptr;
        for (const LeviGenerator& g : block.generators)
          if (g.kind == "cartan" && g.node == node) gen = &g;
        if (!gen) throw SpecFileError("missing cartan generator in levi_action");
        const RationalMatrix& mat = gen->matrices[k - 1];
        for (int p = 0; p < m.layer_dim(k); ++p) {
          Rational d = mat.get(p, p);
          if (d.get_den() != 1) throw SpecFileError("non-integral cartan eigenvalue");
          for (const auto& [c, v] : mat.row(p))
            if (c != p && !is_zero(v))
              throw SpecFileError("cartan action is not diagonal on this basis");
          // opposite-nilradical labels: negate the action eigenvalue
          weights[k - 1][p].push_back(-static_cast<int>(d.get_num().get_si()));
        }
      }
    }
  } else {
    throw SpecFileError("no derivable Cartan action: need provenance or levi_action");
  }

  Json j;
  j["name"] = data.name;
  j["as"] = std::string(1, series) + std::to_string(rank);
  Json layers = Json::array();
  for (int k = 1; k <= m.depth(); ++k) {
    WeightMultiset wm;
    for (const auto& w : weights[k - 1]) wm.add(w, 1);
    layers.push_back(Json{{"degree", -k},
                          {"dim", m.layer_dim(k)},
                          {"modules", irrep_sum_to_json(decompose(rs, wm))}});
  }
  j["layers"] = std::move(layers);
  return j;
}

// ---------------------------------------------------------------------------
// Replay scenarios
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string> kAlgebraFixtures = {
    "heis3",      "m4",          "m5prime",    "m5dprime",  "m4prime",
    "f3_2",       "f4_2",        "f5_2",       "f2_3",      "f3_3",
    "f4_3",       "f2_4",        "m5prime_q",  "m5dprime_q", "m4prime_q",
    "m4dprime_q", "m6prime",     "m6dprime",   "m5ext3"};

struct TableRow {
  const char* name;
  char series;
  int rank;
  int cross;
  const char* mode;  // "full", "levi", "none": nilradical prolongation mode
};

const TableRow kTableRows[] = {
    {"table_B3_p3", 'B', 3, 3, "full"}, {"table_B4_p4", 'B', 4, 4, "full"},
    {"table_G2_p1", 'G', 2, 1, "full"}, {"table_G2_p2", 'G', 2, 2, "levi"},
    {"table_E6_p2", 'E', 6, 2, "levi"}, {"table_E7_p2", 'E', 7, 2, "none"},
    {"table_E8_p2", 'E', 8, 2, "none"}, {"table_E8_p1", 'E', 8, 1, "none"},
    {"table_E8_p8", 'E', 8, 8, "none"},
};

std::string mi_file_name(const TableRow& row) {
  return std::string("mI_") + row.series + std::to_string(row.rank) + "_p" +
         std::to_string(row.cross) + ".json";
}

Json algebra_fixture_report(const std::string& name, const std::string& dir) {
  GnlaData data = read_algebra_file(dir + "/" + name + ".json");
  Json j;
  j["check"] = check_report(data);
  ValidationReport rep = validate(data);
  if (rep.ok())
    j["prolong"] = prolong_report(*rep.algebra, std::nullopt,
                                  default_max_degree(*rep.algebra));
  return j;
}

Json table_fixture_report(const TableRow& row, const std::string& dir) {
  Json j;
  j["parabolic"] = parabolic_report(row.series, row.rank, {row.cross});
  GnlaData data = read_algebra_file(dir + "/" + mi_file_name(row));
  ValidationReport rep = validate(data);
  Json nil;
  nil["valid"] = rep.ok();
  if (rep.ok()) {
    const Gnla& m = *rep.algebra;
    nil["hash"] = algebra_hash(m);
    nil["growth"] = growth_vector(m);
    nil["fundamental"] = is_fundamental(m).fundamental;
    if (std::string(row.mode) != "none") {
      std::optional<DerivationLayer> g0;
      if (std::string(row.mode) == "levi") g0 = levi_derivations(*m.levi());
      ProlongResult pr = prolong(m, g0, default_max_degree(m));
      nil["prolong_mode"] = row.mode;
      nil["prolong_layers"] = pr.layer_dims();
      nil["prolong_total"] = pr.total_dim();
    }
  }
  j["nilradical"] = std::move(nil);
  return j;
}

// The three worked module-decomposition scripts. Each records the wedge
// square of the degree -1 module, the tensor products against both
// reductions of the square, the wedge cube, and the surviving one-layer
// extensions after removing the wedge-cube part where it embeds.
Json example_script_report(const std::string& name) {
  char series;
  int rank;
  WeightVec v_hw, w_prime, w_dprime;
  if (name == "E8a") {
    series = 'A';
    rank = 7;
    v_hw = {0, 0, 1, 0, 0, 0, 0};
  } else if (name == "E8b") {
    series = 'D';
    rank = 7;
    v_hw = {0, 0, 0, 0, 0, 0, 1};
  } else {
    series = 'E';
    rank = 7;
    v_hw = {0, 0, 0, 0, 0, 0, 1};
  }
  RootSystem rs = build_root_system(series, rank);
  const WeightMultiset& v = freudenthal_weights(rs, v_hw);
  WeightMultiset wedge2 = exterior_square_weights(rs, v);
  IrrepSum wedge2_dec = decompose(rs, wedge2);
  if (wedge2_dec.size() != 2) throw std::logic_error("expected two square components");
  // smaller component first: 'prime' is the minimal extension listed first
  auto it = wedge2_dec.begin();
  WeightVec a = it->first;
  WeightVec b = std::next(it)->first;
  if (weyl_dim(rs, a) > weyl_dim(rs, b)) std::swap(a, b);
  w_prime = a;
  w_dprime = b;

  IrrepSum tensor_prime = decompose(rs, tensor_weights(rs, v, freudenthal_weights(rs, w_prime)));
  IrrepSum tensor_dprime =
      decompose(rs, tensor_weights(rs, v, freudenthal_weights(rs, w_dprime)));
  IrrepSum cube = decompose(rs, exterior_cube_weights(rs, v));

  // Components of the cube are removed where they embed; the E7 contact
  // case keeps its trivial-factor tensor untouched (the cube projects
  // into the other factor only).
  auto clip = [](IrrepSum t, const IrrepSum& minus) {
    for (const auto& [w, m] : minus) {
      auto it2 = t.find(w);
      if (it2 == t.end()) continue;
      it2->second -= std::min(it2->second, m);
      if (it2->second == 0) t.erase(it2);
    }
    return t;
  };
  IrrepSum ext_prime =
      name == "E8c" ? tensor_prime : clip(tensor_prime, cube);
  IrrepSum ext_dprime = clip(tensor_dprime, cube);

  Json j;
  j["system"] = std::string(1, series) + std::to_string(rank);
  j["module"] = Json{{"weight", v_hw}, {"dim", static_cast<long long>(v.size())}};
  j["wedge_square"] = irrep_sum_to_json(wedge2_dec);
  j["square_prime"] = irrep_label(w_prime);
  j["square_dprime"] = irrep_label(w_dprime);
  j["tensor_prime"] = irrep_sum_to_json(tensor_prime);
  j["tensor_dprime"] = irrep_sum_to_json(tensor_dprime);
  j["wedge_cube"] = irrep_sum_to_json(cube);
  j["extension_prime"] = irrep_sum_to_json(ext_prime);
  j["extension_dprime"] = irrep_sum_to_json(ext_dprime);
  return j;
}

Json quotient_roundtrip_report(const std::string& dir) {
  GnlaData data = read_algebra_file(dir + "/f5_2.json");
  ValidationReport rep = validate(data);
  if (!rep.ok()) throw std::logic_error("f5_2 fixture invalid");
  auto ideal = read_ideal_file(dir + "/ideal_f5_2_g3.json", rep.algebra->dims());
  GradedSubspace h;
  h.layers = ideal;
  QuotientResult q = quotient(*rep.algebra, h, "f5_2/g3");
  Json j;
  j["quotient_growth"] = q.algebra.dims();
  j["check"] = check_report(q.algebra.to_data());
  return j;
}

}  // namespace

std::vector<std::string> replay_names() {
  std::vector<std::string> names = kAlgebraFixtures;
  for (const TableRow& row : kTableRows) names.push_back(row.name);
  names.insert(names.end(), {"witt_2", "witt_3", "witt_4", "E8a", "E8b", "E8c",
                             "quotient_roundtrip"});
  return names;
}

Json replay_fixture(const std::string& name, const std::string& dir) {
  for (const std::string& a : kAlgebraFixtures)
    if (a == name) return algebra_fixture_report(name, dir);
  for (const TableRow& row : kTableRows)
    if (row.name == name) return table_fixture_report(row, dir);
  if (name == "witt_2") return witt_report(2, 20);
  if (name == "witt_3") return witt_report(3, 15);
  if (name == "witt_4") return witt_report(4, 12);
  if (name == "E8a" || name == "E8b" || name == "E8c") return example_script_report(name);
  if (name == "quotient_roundtrip") return quotient_roundtrip_report(dir);
  throw std::invalid_argument("unknown fixture \"" + name + "\"");
}

}  // namespace gnlat
