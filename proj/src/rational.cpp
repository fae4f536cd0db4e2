#include "cellforms/rational.hpp"

#include "cellforms/errors.hpp"

#include <cctype>

namespace cellforms {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false))) {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  std::string normalized(num.front() == '+' ? num.substr(1) : num);
  if (slash != std::string_view::npos) {
    if (den.find_first_not_of('0') == std::string_view::npos) {
      throw DomainError("zero denominator in rational: '" + std::string(text) + "'");
    }
    normalized += '/';
    normalized += den;
  }
  Rational q(normalized, 10);
  q.canonicalize();
  return q;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace cellforms
