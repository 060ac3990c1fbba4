#include "whk/rational.hpp"

#include "whk/errors.hpp"

namespace whk {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParseError("zero denominator");
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace whk
