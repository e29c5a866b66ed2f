// Regenerates the fixture corpus and the golden replay reports. The
// output is deterministic, so a clean regeneration must reproduce the
// committed files byte for byte.

#include "gnlat/fixtures.hpp"
#include "gnlat/freelie.hpp"
#include "gnlat/parabolic.hpp"
#include "gnlat/report.hpp"

#include <filesystem>
#include <iostream>

using namespace gnlat;

namespace {

void write(const std::string& dir, const Gnla& g, const std::string& file) {
  write_algebra_file(g, dir + "/" + file);
  std::cout << "  " << file << "\n";
}

TrackedQuotient reduction(int n, int s, const std::vector<int>& top_weight,
                          const std::string& name) {
  FreeTruncated f(n, s, 5000);
  std::vector<std::vector<Vec>> ideal(s);
  ideal[s - 1] = f.isotypic_component(s, top_weight);
  return tracked_quotient(f, ideal, name);
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir + "/golden");
  std::cout << "fixtures -> " << dir << "\n";

  write(dir, heisenberg3(), "heis3.json");
  write(dir, fixture_m4(), "m4.json");
  write(dir, fixture_m5_prime(), "m5prime.json");
  write(dir, fixture_m5_dprime(), "m5dprime.json");
  write(dir, fixture_m4_prime(), "m4prime.json");

  write(dir, tracked_free(2, 3).algebra, "f3_2.json");
  write(dir, tracked_free(2, 4).algebra, "f4_2.json");
  write(dir, tracked_free(2, 5).algebra, "f5_2.json");
  write(dir, tracked_free(3, 2).algebra, "f2_3.json");
  write(dir, tracked_free(3, 3).algebra, "f3_3.json");
  write(dir, tracked_free(3, 4).algebra, "f4_3.json");
  write(dir, tracked_free(4, 2).algebra, "f2_4.json");

  TrackedQuotient m5p = reduction(2, 5, {3}, "m5prime_q");
  TrackedQuotient m5dp = reduction(2, 5, {1}, "m5dprime_q");
  TrackedQuotient m4p = reduction(3, 4, {2, 1}, "m4prime_q");
  TrackedQuotient m4dp = reduction(3, 4, {1, 0}, "m4dprime_q");
  write(dir, m5p.algebra, "m5prime_q.json");
  write(dir, m5dp.algebra, "m5dprime_q.json");
  write(dir, m4p.algebra, "m4prime_q.json");
  write(dir, m4dp.algebra, "m4dprime_q.json");

  write(dir, maximal_extension(m5p, "m6prime").algebra, "m6prime.json");
  write(dir, maximal_extension(m5dp, "m6dprime").algebra, "m6dprime.json");
  write(dir, maximal_extension(m4p, "m5ext3").algebra, "m5ext3.json");

  {
    FreeTruncated f(2, 5, 5000);
    std::vector<std::vector<Vec>> ideal(5);
    ideal[4] = f.isotypic_component(5, {3});
    write_ideal_file(ideal, dir + "/ideal_f5_2_g3.json");
    std::cout << "  ideal_f5_2_g3.json\n";
  }

  const std::tuple<char, int, int> rows[] = {
      {'B', 3, 3}, {'B', 4, 4}, {'G', 2, 1}, {'G', 2, 2}, {'E', 6, 2},
      {'E', 7, 2}, {'E', 8, 2}, {'E', 8, 1}, {'E', 8, 8}};
  for (const auto& [series, rank, cross] : rows) {
    NilradicalResult nr = negative_nilradical(build_root_system(series, rank), {cross});
    std::string file = std::string("mI_") + series + std::to_string(rank) + "_p" +
                       std::to_string(cross) + ".json";
    write(dir, nr.algebra, file);
  }

  std::cout << "golden reports\n";
  for (const std::string& name : replay_names()) {
    Json j = replay_fixture(name, dir);
    write_text_file(dir + "/golden/" + name + ".json", j.dump(2) + "\n");
    std::cout << "  golden/" << name << ".json\n";
  }
  return 0;
}
