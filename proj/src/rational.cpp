#include "evencliff/rational.hpp"

#include <stdexcept>

namespace evencliff {

std::string to_string(const Rational& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace evencliff
