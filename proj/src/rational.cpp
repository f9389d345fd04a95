#include "tom/rational.hpp"

#include <cctype>

namespace tom {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw MalformedRational("malformed rational \"" + std::string(text) + "\"");
  }
  using boost::multiprecision::cpp_int;
  const cpp_int q{std::string(den)};
  if (q == 0) throw MalformedRational("zero denominator in \"" + std::string(text) + "\"");
  return Rational(cpp_int{std::string(num)}, q);
}

std::string format_rational(const Rational& value) {
  const auto num = numerator(value);
  const auto den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace tom
