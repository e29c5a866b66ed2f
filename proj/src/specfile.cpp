#include "gnlat/specfile.hpp"

#include <fstream>
#include <set>

namespace gnlat {

namespace {

void require_keys(const Json& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const std::string& where) {
  if (!j.is_object()) throw SpecFileError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!required.count(key) && !optional.count(key))
      throw SpecFileError(where + ": unknown key \"" + key + "\"");
  }
  for (const std::string& key : required)
    if (!j.contains(key)) throw SpecFileError(where + ": missing key \"" + key + "\"");
}

Rational parse_rat(const Json& j, const std::string& where) {
  if (!j.is_string()) throw SpecFileError(where + ": rational must be a string");
  auto q = parse_rational(j.get<std::string>());
  if (!q) throw SpecFileError(where + ": malformed rational \"" + j.get<std::string>() + "\"");
  return *q;
}

int parse_index(const Json& j, int lo, int hi, const std::string& where) {
  if (!j.is_number_integer())
    throw SpecFileError(where + ": expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi)
    throw SpecFileError(where + ": index " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

Json sparse_matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out.push_back(Json::array({r + 1, c + 1, rat_str(v)}));
  return out;
}

RationalMatrix sparse_matrix_from_json(const Json& j, int rows, int cols,
                                       const std::string& where) {
  if (!j.is_array()) throw SpecFileError(where + ": expected an array of triplets");
  RationalMatrix m(rows, cols);
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3) throw SpecFileError(where + ": bad triplet");
    int r = parse_index(t[0], 1, rows, where);
    int c = parse_index(t[1], 1, cols, where);
    Rational v = parse_rat(t[2], where);
    if (is_zero(v)) throw SpecFileError(where + ": zero entry stored");
    if (!is_zero(m.get(r - 1, c - 1))) throw SpecFileError(where + ": duplicate entry");
    m.set(r - 1, c - 1, v);
  }
  return m;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (size_t c = 0; c < v.size(); ++c)
    if (!is_zero(v[c])) out.push_back(Json::array({static_cast<int>(c) + 1, rat_str(v[c])}));
  return out;
}

Vec vec_from_json(const Json& j, int dim, const std::string& where) {
  if (!j.is_array()) throw SpecFileError(where + ": expected a sparse vector");
  Vec v(dim, Rational(0));
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 2) throw SpecFileError(where + ": bad vector entry");
    int c = parse_index(t[0], 1, dim, where);
    Rational val = parse_rat(t[1], where);
    if (is_zero(val)) throw SpecFileError(where + ": zero entry stored");
    if (!is_zero(v[c - 1])) throw SpecFileError(where + ": duplicate coordinate");
    v[c - 1] = val;
  }
  return v;
}

}  // namespace

Json algebra_to_json(const Gnla& g) {
  GnlaData d = g.to_data();
  Json j;
  j["name"] = d.name;
  if (!d.comment.empty()) j["comment"] = d.comment;
  j["dims"] = d.dims;
  Json brackets = Json::array();
  for (const RawBracket& br : d.brackets) {
    Json e;
    e["left"] = Json::array({br.li, br.la + 1});
    e["right"] = Json::array({br.lj, br.lb + 1});
    Json value = Json::array();
    for (const RawValue& rv : br.value)
      value.push_back(Json::array({rv.coord + 1, rat_str(rv.value)}));
    e["value"] = std::move(value);
    brackets.push_back(std::move(e));
  }
  j["brackets"] = std::move(brackets);

  if (d.provenance) {
    Json p;
    p["free"] = Json{{"n", d.provenance->n}, {"s", d.provenance->s}};
    Json ideal = Json::array();
    for (const auto& layer : d.provenance->ideal) {
      Json lv = Json::array();
      for (const Vec& v : layer) lv.push_back(vec_to_json(v));
      ideal.push_back(std::move(lv));
    }
    p["ideal"] = std::move(ideal);
    j["provenance"] = std::move(p);
  }

  if (d.levi) {
    Json l;
    l["type"] = std::string(1, d.levi->series) + std::to_string(d.levi->rank);
    l["crossed"] = d.levi->crossed;
    Json comps = Json::array();
    for (const LeviComponentInfo& c : d.levi->components)
      comps.push_back(Json{{"series", std::string(1, c.series)},
                           {"rank", c.rank},
                           {"nodes", c.nodes}});
    l["components"] = std::move(comps);
    Json gens = Json::array();
    for (const LeviGenerator& gen : d.levi->generators) {
      Json e;
      e["kind"] = gen.kind;
      if (gen.kind == "cartan") e["node"] = gen.node;
      if (gen.kind == "root") e["root"] = gen.root;
      Json mats = Json::array();
      for (const RationalMatrix& m : gen.matrices) mats.push_back(sparse_matrix_to_json(m));
      e["matrices"] = std::move(mats);
      gens.push_back(std::move(e));
    }
    l["generators"] = std::move(gens);
    j["levi_action"] = std::move(l);
  }
  return j;
}

GnlaData algebra_from_json(const Json& j) {
  require_keys(j, {"name", "dims", "brackets"},
               {"comment", "provenance", "levi_action"}, "algebra");
  GnlaData d;
  if (!j["name"].is_string()) throw SpecFileError("name must be a string");
  d.name = j["name"].get<std::string>();
  if (j.contains("comment")) {
    if (!j["comment"].is_string()) throw SpecFileError("comment must be a string");
    d.comment = j["comment"].get<std::string>();
  }
  if (!j["dims"].is_array() || j["dims"].empty())
    throw SpecFileError("dims must be a nonempty array");
  for (const Json& e : j["dims"])
    d.dims.push_back(parse_index(e, 1, 1 << 20, "dims"));
  const int s = static_cast<int>(d.dims.size());

  if (!j["brackets"].is_array()) throw SpecFileError("brackets must be an array");
  std::set<std::tuple<int, int, int, int>> seen;
  for (const Json& e : j["brackets"]) {
    require_keys(e, {"left", "right", "value"}, {}, "bracket");
    if (!e["left"].is_array() || e["left"].size() != 2 || !e["right"].is_array() ||
        e["right"].size() != 2)
      throw SpecFileError("bracket sides must be [layer, position] pairs");
    RawBracket br;
    br.li = parse_index(e["left"][0], 1, s, "bracket left layer");
    br.la = parse_index(e["left"][1], 1, d.dims[br.li - 1], "bracket left position") - 1;
    br.lj = parse_index(e["right"][0], 1, s, "bracket right layer");
    br.lb = parse_index(e["right"][1], 1, d.dims[br.lj - 1], "bracket right position") - 1;
    if (br.li > br.lj || (br.li == br.lj && br.la >= br.lb))
      throw SpecFileError("bracket pair not in canonical order");
    if (!seen.insert({br.li, br.la, br.lj, br.lb}).second)
      throw SpecFileError("duplicate bracket pair");
    const int target = br.li + br.lj;
    if (target > s) throw SpecFileError("bracket value lands beyond the depth");
    std::set<int> coords;
    for (const Json& t : e["value"]) {
      if (!t.is_array() || t.size() != 2) throw SpecFileError("bad bracket value entry");
      int c = parse_index(t[0], 1, d.dims[target - 1], "bracket value coordinate");
      Rational v = parse_rat(t[1], "bracket value");
      if (is_zero(v)) throw SpecFileError("zero bracket value stored");
      if (!coords.insert(c).second) throw SpecFileError("duplicate bracket value coordinate");
      br.value.push_back({target, c - 1, v});
    }
    d.brackets.push_back(std::move(br));
  }

  if (j.contains("provenance")) {
    const Json& p = j["provenance"];
    require_keys(p, {"free", "ideal"}, {}, "provenance");
    require_keys(p["free"], {"n", "s"}, {}, "provenance.free");
    Provenance prov;
    prov.n = parse_index(p["free"]["n"], 2, 64, "provenance n");
    prov.s = parse_index(p["free"]["s"], 1, 64, "provenance s");
    if (!p["ideal"].is_array() || static_cast<int>(p["ideal"].size()) != prov.s)
      throw SpecFileError("provenance ideal must list one entry per layer");
    // Free layer dimensions are needed to size the vectors; the Witt
    // numbers are recomputed here to keep parsing self-contained.
    auto witt = [](int n, int k) {
      auto mob = [](int m) {
        int r = 1;
        for (int q = 2; q * q <= m; ++q) {
          if (m % q) continue;
          m /= q;
          if (m % q == 0) return 0;
          r = -r;
        }
        return m > 1 ? -r : r;
      };
      long long sum = 0;
      for (int t = 1; t <= k; ++t)
        if (k % t == 0) {
          long long pw = 1;
          for (int e = 0; e < k / t; ++e) pw *= n;
          sum += mob(t) * pw;
        }
      return sum / k;
    };
    for (int k = 1; k <= prov.s; ++k) {
      const Json& layer = p["ideal"][k - 1];
      if (!layer.is_array()) throw SpecFileError("provenance ideal layer must be an array");
      std::vector<Vec> vs;
      for (const Json& v : layer)
        vs.push_back(vec_from_json(v, static_cast<int>(witt(prov.n, k)), "provenance ideal"));
      prov.ideal.push_back(std::move(vs));
    }
    d.provenance = std::move(prov);
  }

  if (j.contains("levi_action")) {
    const Json& l = j["levi_action"];
    require_keys(l, {"type", "crossed", "components", "generators"}, {}, "levi_action");
    LeviBlock block;
    std::string type = l["type"].get<std::string>();
    if (type.size() < 2) throw SpecFileError("levi_action type malformed");
    block.series = type[0];
    block.rank = std::stoi(type.substr(1));
    for (const Json& c : l["crossed"])
      block.crossed.push_back(parse_index(c, 1, block.rank, "levi crossed"));
    for (const Json& c : l["components"]) {
      require_keys(c, {"series", "rank", "nodes"}, {}, "levi component");
      LeviComponentInfo info;
      info.series = c["series"].get<std::string>().at(0);
      info.rank = parse_index(c["rank"], 1, block.rank, "levi component rank");
      for (const Json& n : c["nodes"])
        info.nodes.push_back(parse_index(n, 1, block.rank, "levi component node"));
      block.components.push_back(std::move(info));
    }
    for (const Json& g : l["generators"]) {
      require_keys(g, {"kind", "matrices"}, {"node", "root"}, "levi generator");
      LeviGenerator gen;
      gen.kind = g["kind"].get<std::string>();
      if (gen.kind == "cartan")
        gen.node = parse_index(g.at("node"), 1, block.rank, "levi generator node");
      else if (gen.kind == "root") {
        for (const Json& e : g.at("root")) gen.root.push_back(e.get<int>());
      } else {
        throw SpecFileError("levi generator kind must be cartan or root");
      }
      if (!g["matrices"].is_array() || static_cast<int>(g["matrices"].size()) != s)
        throw SpecFileError("levi generator needs one matrix per layer");
      for (int k = 1; k <= s; ++k)
        gen.matrices.push_back(sparse_matrix_from_json(g["matrices"][k - 1], d.dims[k - 1],
                                                       d.dims[k - 1], "levi matrix"));
      block.generators.push_back(std::move(gen));
    }
    d.levi = std::move(block);
  }
  return d;
}

void write_algebra_file(const Gnla& g, const std::string& path) {
  write_text_file(path, algebra_to_json(g).dump(2) + "\n");
}

GnlaData read_algebra_file(const std::string& path) {
  return algebra_from_json(read_json_file(path));
}

Json ideal_to_json(const std::vector<std::vector<Vec>>& layers) {
  Json arr = Json::array();
  for (size_t k = 0; k < layers.size(); ++k) {
    if (layers[k].empty()) continue;
    Json vs = Json::array();
    for (const Vec& v : layers[k]) vs.push_back(vec_to_json(v));
    arr.push_back(Json{{"layer", static_cast<int>(k) + 1}, {"vectors", std::move(vs)}});
  }
  return Json{{"ideal", std::move(arr)}};
}

std::vector<std::vector<Vec>> ideal_from_json(const Json& j, const std::vector<int>& dims) {
  require_keys(j, {"ideal"}, {}, "ideal file");
  std::vector<std::vector<Vec>> layers(dims.size());
  if (!j["ideal"].is_array()) throw SpecFileError("ideal must be an array");
  for (const Json& e : j["ideal"]) {
    require_keys(e, {"layer", "vectors"}, {}, "ideal entry");
    int k = parse_index(e["layer"], 1, static_cast<int>(dims.size()), "ideal layer");
    for (const Json& v : e["vectors"])
      layers[k - 1].push_back(vec_from_json(v, dims[k - 1], "ideal vector"));
  }
  return layers;
}

void write_ideal_file(const std::vector<std::vector<Vec>>& layers, const std::string& path) {
  write_text_file(path, ideal_to_json(layers).dump(2) + "\n");
}

std::vector<std::vector<Vec>> read_ideal_file(const std::string& path,
                                              const std::vector<int>& dims) {
  return ideal_from_json(read_json_file(path), dims);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecFileError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw SpecFileError(path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw SpecFileError("cannot open " + path + " for writing");
  out << text;
}

}  // namespace gnlat
