#include "tridiss/rational.hpp"

#include <stdexcept>

namespace tridiss {

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  BigInt d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(BigInt(std::string(num), 10), d);
  q.canonicalize();
  return q;
}

}  // namespace tridiss
