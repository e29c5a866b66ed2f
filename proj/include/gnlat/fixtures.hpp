#pragma once

#include "gnlat/gnla.hpp"

namespace gnlat {

// Call-site friendly construction: positions and value coordinates are
// 1-based, values land in layer li + lj.
class GnlaBuilder {
 public:
  GnlaBuilder(std::string name, std::vector<int> dims)
      : name_(std::move(name)), dims_(std::move(dims)) {}

  GnlaBuilder& br(int li, int la, int lj, int lb,
                  std::vector<std::pair<int, Rational>> terms) {
    RawBracket b;
    b.li = li;
    b.la = la - 1;
    b.lj = lj;
    b.lb = lb - 1;
    for (auto& [coord, val] : terms) b.value.push_back({li + lj, coord - 1, val});
    brackets_.push_back(std::move(b));
    return *this;
  }

  GnlaBuilder& comment(std::string c) {
    comment_ = std::move(c);
    return *this;
  }

  GnlaData data() const {
    GnlaData d;
    d.name = name_;
    d.comment = comment_;
    d.dims = dims_;
    d.brackets = brackets_;
    return d;
  }

  Gnla build() const { return Gnla::from_data(data()); }

 private:
  std::string name_, comment_;
  std::vector<int> dims_;
  std::vector<RawBracket> brackets_;
};

// The worked structure-constant algebras used across tests, the CLI
// fixture corpus and the acceptance suite.
Gnla heisenberg3();          // growth (2,1)
Gnla abelian(int n);         // growth (n)
Gnla fixture_m4();           // growth (2,1,2,3): common depth-4 relations
Gnla fixture_m5_prime();     // growth (2,1,2,3,2)
Gnla fixture_m5_dprime();    // growth (2,1,2,3,4)
Gnla fixture_m4_prime();     // growth (3,3,8,3)

}  // namespace gnlat
