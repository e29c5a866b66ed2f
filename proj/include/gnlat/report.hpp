#pragma once

#include "gnlat/prolong.hpp"
#include "gnlat/rootsys.hpp"
#include "gnlat/specfile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gnlat {

// JSON report builders shared by the command line tool, the golden
// fixtures and the acceptance suite. All output is deterministic: sorted
// keys, canonical rationals, no floating point.

Json check_report(const GnlaData& data);
Json prolong_report(const Gnla& m, const std::optional<DerivationLayer>& g0, int max_degree);
Json ranktest_report(const Gnla& m, const std::optional<DerivationLayer>& g0);
Json witt_report(int n, int upto);
Json parabolic_report(char series, int rank, const std::vector<int>& crossed);
// Per-layer module decomposition of an algebra whose Cartan action is
// derivable (free/sub-free provenance) or attached (levi_action block).
Json decompose_report(const GnlaData& data, char series, int rank);

Json irrep_sum_to_json(const IrrepSum& s);

// Named end-to-end fixture scenarios; replay recomputes the report from
// the files in fixtures_dir.
std::vector<std::string> replay_names();
Json replay_fixture(const std::string& name, const std::string& fixtures_dir);

}  // namespace gnlat
