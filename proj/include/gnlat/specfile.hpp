#pragma once

#include "gnlat/gnla.hpp"

#include "json.hpp"

#include <string>

namespace gnlat {

using Json = nlohmann::json;

struct SpecFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Algebra spec files: UTF-8 JSON with keys name/comment/dims/brackets and
// the optional provenance and levi_action blocks. Basis positions and
// value coordinates are 1-based on disk; rationals are "p" or "p/q"
// strings; bracket pairs must be stored in canonical order; unknown keys
// are rejected.
Json algebra_to_json(const Gnla& g);
GnlaData algebra_from_json(const Json& j);

void write_algebra_file(const Gnla& g, const std::string& path);
GnlaData read_algebra_file(const std::string& path);

// Graded-subspace (ideal) files: {"ideal": [{"layer": k, "vectors":
// [[[coord, "p/q"], ...], ...]}, ...]} with layer-local dense meaning.
Json ideal_to_json(const std::vector<std::vector<Vec>>& layers);
std::vector<std::vector<Vec>> ideal_from_json(const Json& j, const std::vector<int>& dims);
void write_ideal_file(const std::vector<std::vector<Vec>>& layers, const std::string& path);
std::vector<std::vector<Vec>> read_ideal_file(const std::string& path,
                                              const std::vector<int>& dims);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gnlat
