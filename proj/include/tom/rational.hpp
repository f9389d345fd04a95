#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "tom/error.hpp"

namespace tom {

using Rational = boost::multiprecision::cpp_rational;

class MalformedRational : public Error {
 public:
  using Error::Error;
};

// Accepts "p/q" or an integer, optional leading '-'. Throws MalformedRational.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace tom
