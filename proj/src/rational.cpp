#include "fdconvex/rational.hpp"

#include <stdexcept>

namespace fdconvex {

std::string to_string(const Rational& q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
  if (text.empty()) {
    throw std::invalid_argument("empty rational");
  }
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace fdconvex
