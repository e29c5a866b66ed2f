#include "gnlat/rational.hpp"

namespace gnlat {

std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& s) {
  size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  size_t start = 0;
  if (!num.empty() && num[0] == '-') start = 1;
  if (!all_digits(num, start, num.size())) return std::nullopt;
  if (slash != std::string::npos) {
    if (!all_digits(s, slash + 1, s.size())) return std::nullopt;
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  if (sgn(Integer(q.get_den())) <= 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace gnlat
