#include "smb/rational.hpp"

#include <stdexcept>

namespace smb {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace smb
