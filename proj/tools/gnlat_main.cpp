#include "CLI11.hpp"

#include "gnlat/fixtures.hpp"
#include "gnlat/freelie.hpp"
#include "gnlat/parabolic.hpp"
#include "gnlat/report.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

using namespace gnlat;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitBadInput = 2;

long long max_dim_cap() {
  if (const char* env = std::getenv("GNLAT_MAX_DIM")) return std::atoll(env);
  return 5000;
}

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<char, int> parse_type(std::string type, int rank_flag) {
  if (type.empty()) throw BadInput("empty type");
  char series = std::toupper(type[0]);
  int rank = rank_flag;
  if (type.size() > 1) {
    int from_type = std::atoi(type.c_str() + 1);
    if (from_type <= 0) throw BadInput("malformed type " + type);
    if (rank > 0 && rank != from_type)
      throw BadInput("rank disagrees with the type string");
    rank = from_type;
  }
  if (rank <= 0) throw BadInput("missing rank");
  return {series, rank};
}

Gnla load_valid_algebra(const std::string& path) {
  GnlaData data = read_algebra_file(path);
  ValidationReport rep = validate(data);
  if (!rep.ok()) throw BadInput(path + " is not a valid algebra: " + rep.detail);
  return *rep.algebra;
}

std::optional<DerivationLayer> parse_g0(const std::string& g0, const Gnla& m) {
  if (g0.empty() || g0 == "full") return std::nullopt;
  GnlaData data = read_algebra_file(g0);
  if (!data.levi) throw BadInput(g0 + " carries no levi_action block");
  if (data.dims != m.dims()) throw BadInput(g0 + " has mismatched layer dimensions");
  return levi_derivations(*data.levi);
}

void print_kv(const std::string& k, const std::string& v) {
  std::cout << "  " << k;
  for (size_t i = k.size(); i < 22; ++i) std::cout << ' ';
  std::cout << v << "\n";
}

std::string vec_str(const Json& arr) {
  std::string s = "(";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ",";
    s += arr[i].dump();
  }
  return s + ")";
}

std::string modules_str(const Json& mods) {
  std::string s;
  for (const Json& m : mods) {
    if (!s.empty()) s += " + ";
    long long mult = m["mult"].get<long long>();
    if (mult != 1) s += std::to_string(mult) + "*";
    s += m["label"].get<std::string>();
  }
  return s.empty() ? "0" : s;
}

void print_check(const Json& j) {
  std::cout << "algebra " << j["name"].get<std::string>() << "\n";
  print_kv("dims", vec_str(j["dims"]));
  const Json& v = j["validation"];
  std::string status = v["structure"].get<bool>()
                           ? (v["grading"].get<bool>()
                                  ? (v["jacobi"].get<bool>() ? "valid" : "Jacobi fails")
                                  : "grading fails")
                           : "malformed";
  print_kv("validation", status + (v["detail"].get<std::string>().empty()
                                       ? ""
                                       : " (" + v["detail"].get<std::string>() + ")"));
  if (!j.contains("fundamental")) return;
  print_kv("hash", j["hash"].get<std::string>());
  print_kv("fundamental", j["fundamental"]["value"].get<bool>() ? "yes" : "no");
  print_kv("sub-free",
           std::string(j["subfree"]["value"].get<bool>() ? "yes" : "no") + " (der0 dim " +
               std::to_string(j["subfree"]["der0_dim"].get<long long>()) + ", n = " +
               std::to_string(j["subfree"]["n"].get<long long>()) + ")");
}

void print_prolong(const Json& j) {
  print_kv("g0 dim", j["g0"]["dim"].dump() +
                         (j["g0"]["is_n_squared"].get<bool>() ? " (= n^2)" : ""));
  print_kv("layer dims", vec_str(j["layers"]));
  print_kv("status", j["status"].get<std::string>());
  if (j.contains("symmetry_bound")) print_kv("symmetry bound", j["symmetry_bound"].dump());
  const Json& r = j["rank_one"];
  std::string rank_one =
      r["verdict"].get<std::string>() + " [" + r["method"].get<std::string>() + "]";
  if (!r["witness"].is_null()) rank_one += " witness " + vec_str(r["witness"]);
  print_kv("rank-one", rank_one);
}

int run(int argc, char** argv) {
  CLI::App app{"exact toolkit for graded nilpotent Lie algebras and their prolongations"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON on stdout");

  auto* witt_cmd = app.add_subcommand("witt", "free Lie algebra layer dimensions");
  int witt_n = 2, witt_upto = 10;
  witt_cmd->add_option("--gens", witt_n, "number of generators")->required();
  witt_cmd->add_option("--upto", witt_upto, "last degree")->required();

  auto* free_cmd = app.add_subcommand("free", "emit a truncated free algebra spec file");
  int free_n = 2, free_s = 3;
  std::string free_out;
  free_cmd->add_option("--gens", free_n)->required();
  free_cmd->add_option("--depth", free_s)->required();
  free_cmd->add_option("--out", free_out, "output file")->required();

  auto* check_cmd = app.add_subcommand("check", "validate + fundamental + sub-free report");
  std::string check_file;
  check_cmd->add_option("file", check_file)->required();

  auto* quot_cmd = app.add_subcommand("quotient", "quotient by a graded ideal");
  std::string quot_file, quot_ideal, quot_out, quot_name;
  quot_cmd->add_option("file", quot_file)->required();
  quot_cmd->add_option("--ideal", quot_ideal, "ideal file")->required();
  quot_cmd->add_option("--out", quot_out)->required();
  quot_cmd->add_option("--name", quot_name, "name of the quotient algebra");

  auto* ext_cmd = app.add_subcommand("extend", "maximal one-layer extension");
  std::string ext_file, ext_out, ext_name;
  ext_cmd->add_option("file", ext_file)->required();
  ext_cmd->add_option("--out", ext_out)->required();
  ext_cmd->add_option("--name", ext_name);

  auto* pro_cmd = app.add_subcommand("prolong", "Tanaka prolongation report");
  std::string pro_file, pro_g0 = "full";
  int pro_max = 0;
  pro_cmd->add_option("file", pro_file)->required();
  pro_cmd->add_option("--g0", pro_g0, "full, or an algebra file with a levi_action block");
  pro_cmd->add_option("--max-degree", pro_max, "degree cap (default 2*depth + 2)");

  auto* rank_cmd = app.add_subcommand("ranktest", "rank-one finite-type analysis");
  std::string rank_file, rank_g0 = "full";
  rank_cmd->add_option("file", rank_file)->required();
  rank_cmd->add_option("--g0", rank_g0);

  auto* dec_cmd = app.add_subcommand("decompose", "per-layer module decomposition");
  std::string dec_file, dec_as;
  dec_cmd->add_option("file", dec_file)->required();
  dec_cmd->add_option("--as", dec_as, "root system TYPE,RANK (e.g. A,7)")->required();

  auto* par_cmd = app.add_subcommand("parabolic", "parabolic grading of a simple algebra");
  std::string par_type, par_out;
  int par_rank = 0;
  std::vector<int> par_cross;
  par_cmd->add_option("--type", par_type, "series letter or e.g. E8")->required();
  par_cmd->add_option("--rank", par_rank);
  par_cmd->add_option("--cross", par_cross, "crossed nodes")->required()->delimiter(',');
  par_cmd->add_option("--out", par_out, "emit the nilradical spec file");

  auto* rep_cmd = app.add_subcommand("replay", "recompute a named fixture and diff");
  std::string rep_fixture, rep_dir = "fixtures";
  rep_cmd->add_option("--fixture", rep_fixture, "fixture name")->required();
  rep_cmd->add_option("--dir", rep_dir, "fixture directory");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  Json out;
  int exit_code = 0;

  if (*witt_cmd) {
    if (witt_n < 2 || witt_upto < 1) throw BadInput("need --gens >= 2, --upto >= 1");
    out = witt_report(witt_n, witt_upto);
    if (!as_json) {
      std::cout << "free Lie layer dimensions, n = " << witt_n << ":\n ";
      for (const Json& d : out["dims"]) std::cout << " " << d.dump();
      std::cout << "\n";
    }
  } else if (*free_cmd) {
    TrackedQuotient f = tracked_free(free_n, free_s, max_dim_cap());
    write_algebra_file(f.algebra, free_out);
    out = Json{{"written", free_out}, {"dims", f.algebra.dims()}};
    if (!as_json)
      std::cout << "wrote " << free_out << " with growth " << vec_str(out["dims"]) << "\n";
  } else if (*check_cmd) {
    GnlaData data = read_algebra_file(check_file);
    out = check_report(data);
    if (!as_json) print_check(out);
    if (!out["validation"]["structure"].get<bool>() ||
        !out["validation"]["grading"].get<bool>() ||
        !out["validation"]["jacobi"].get<bool>())
      exit_code = kExitValidation;
  } else if (*quot_cmd) {
    Gnla m = load_valid_algebra(quot_file);
    auto layers = read_ideal_file(quot_ideal, m.dims());
    std::string name = quot_name.empty() ? m.name() + "_q" : quot_name;
    std::optional<Gnla> result;
    if (m.provenance()) {
      // compose with the tracked presentation so the result stays extendable
      TrackedQuotient base = from_provenance(*m.provenance(), m.name(), max_dim_cap());
      std::vector<std::vector<Vec>> free_ideal = base.ideal;
      for (size_t k = 1; k <= layers.size(); ++k)
        for (const Vec& v : layers[k - 1])
          free_ideal[k - 1].push_back(lift_to_free(base, static_cast<int>(k), v));
      FreeTruncated f(base.n, base.s, max_dim_cap());
      result = tracked_quotient(f, free_ideal, name).algebra;
    } else {
      GradedSubspace h;
      h.layers = layers;
      result = quotient(m, h, name).algebra;
    }
    write_algebra_file(*result, quot_out);
    out = Json{{"written", quot_out}, {"dims", result->dims()}};
    if (!as_json)
      std::cout << "wrote " << quot_out << " with growth " << vec_str(out["dims"]) << "\n";
  } else if (*ext_cmd) {
    GnlaData data = read_algebra_file(ext_file);
    if (!data.provenance) throw BadInput(ext_file + " lacks quotient provenance");
    TrackedQuotient base = from_provenance(*data.provenance, data.name, max_dim_cap());
    std::string name = ext_name.empty() ? data.name + "_ext" : ext_name;
    TrackedQuotient ext = maximal_extension(base, name, max_dim_cap());
    write_algebra_file(ext.algebra, ext_out);
    out = Json{{"written", ext_out},
               {"dims", ext.algebra.dims()},
               {"new_layer_dim", ext.algebra.dims().back()}};
    if (!as_json)
      std::cout << "wrote " << ext_out << " with growth " << vec_str(out["dims"]) << "\n";
  } else if (*pro_cmd) {
    Gnla m = load_valid_algebra(pro_file);
    std::optional<DerivationLayer> g0 = parse_g0(pro_g0, m);
    int cap = pro_max > 0 ? pro_max : default_max_degree(m);
    out = prolong_report(m, g0, cap);
    if (!as_json) {
      std::cout << "prolongation of " << m.name() << "\n";
      print_prolong(out);
    }
  } else if (*rank_cmd) {
    Gnla m = load_valid_algebra(rank_file);
    std::optional<DerivationLayer> g0 = parse_g0(rank_g0, m);
    out = ranktest_report(m, g0);
    if (!as_json) {
      const Json& r = out["rank_one"];
      std::cout << "rank-one analysis of " << m.name() << "\n";
      print_kv("verdict", r["verdict"].get<std::string>());
      print_kv("method", r["method"].get<std::string>());
      if (!r["witness"].is_null()) print_kv("witness", vec_str(r["witness"]));
    }
  } else if (*dec_cmd) {
    auto comma = dec_as.find(',');
    std::string type = comma == std::string::npos ? dec_as : dec_as.substr(0, comma);
    int rank = comma == std::string::npos ? 0 : std::atoi(dec_as.c_str() + comma + 1);
    auto [series, r] = parse_type(type, rank);
    GnlaData data = read_algebra_file(dec_file);
    out = decompose_report(data, series, r);
    if (!as_json) {
      std::cout << "decomposition of " << out["name"].get<std::string>() << " over "
                << out["as"].get<std::string>() << "\n";
      for (const Json& l : out["layers"])
        print_kv("degree " + l["degree"].dump(),
                 modules_str(l["modules"]) + "  (dim " + l["dim"].dump() + ")");
    }
  } else if (*par_cmd) {
    auto [series, rank] = parse_type(par_type, par_rank);
    out = parabolic_report(series, rank, par_cross);
    if (!par_out.empty()) {
      NilradicalResult nr = negative_nilradical(build_root_system(series, rank), par_cross);
      write_algebra_file(nr.algebra, par_out);
      out["written"] = par_out;
    }
    if (!as_json) {
      std::cout << out["type"].get<std::string>() << ", crossed " << vec_str(out["crossed"])
                << "\n";
      print_kv("growth", vec_str(out["growth"]));
      print_kv("g0", out["g0"]["description"].get<std::string>() + " (dim " +
                         out["g0"]["dim"].dump() + ")");
      for (const Json& l : out["layers"])
        print_kv("degree " + l["degree"].dump(),
                 modules_str(l["modules"]) + "  (dim " + l["dim"].dump() + ")");
      if (out.contains("written")) print_kv("written", out["written"].get<std::string>());
    }
  } else if (*rep_cmd) {
    if (const char* env = std::getenv("GNLAT_FIXTURES")) {
      if (rep_dir == "fixtures") rep_dir = env;
    }
    Json computed = replay_fixture(rep_fixture, rep_dir);
    Json golden = read_json_file(rep_dir + "/golden/" + rep_fixture + ".json");
    bool match = computed == golden;
    out = Json{{"fixture", rep_fixture}, {"match", match}};
    if (!match) {
      out["computed"] = computed;
      exit_code = kExitValidation;
    }
    if (!as_json)
      std::cout << "replay " << rep_fixture << ": " << (match ? "ok" : "MISMATCH") << "\n";
  }

  if (as_json) std::cout << out.dump(2) << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  bool as_json = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--json") == 0) as_json = true;
  auto report_error = [&](const std::string& what) {
    if (as_json)
      std::cout << Json{{"error", what}}.dump(2) << "\n";
    else
      std::cerr << "error: " << what << "\n";
  };
  try {
    return run(argc, argv);
  } catch (const BadInput& e) {
    report_error(e.what());
    return kExitBadInput;
  } catch (const SpecFileError& e) {
    report_error(e.what());
    return kExitBadInput;
  } catch (const CLI::ParseError&) {
    return kExitBadInput;
  } catch (const std::exception& e) {
    report_error(e.what());
    return kExitBadInput;
  }
}
