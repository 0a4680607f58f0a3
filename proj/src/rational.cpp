#include "blp/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace blp {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& token) {
  std::string body = token;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = (body[0] == '-');
    body.erase(0, 1);
  }
  std::string num = body;
  std::string den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational literal: '" + token + "'");
  }
  // GMP reads a leading 0 as an octal prefix; strip to keep plain decimal.
  num.erase(0, std::min(num.find_first_not_of('0'), num.size() - 1));
  den.erase(0, std::min(den.find_first_not_of('0'), den.size() - 1));
  Int denominator(den);
  if (denominator == 0) {
    throw std::invalid_argument("zero denominator in '" + token + "'");
  }
  Rat value{Int(num), denominator};
  return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

Int factorial(unsigned n) {
  Int result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Rat rat_pow(const Rat& base, unsigned exponent) {
  Rat result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Int lcm_denominators(const RatVector& values) {
  Int result = 1;
  for (const Rat& v : values) {
    result = boost::multiprecision::lcm(result, Int(denominator(v)));
  }
  return result;
}

}  // namespace blp
