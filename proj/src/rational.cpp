#include "hpzero/rational.hpp"

#include <cctype>

#include "hpzero/errors.hpp"

namespace hpzero {

namespace {

bool plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!plain_integer(num) || !plain_integer(den))
    throw InvalidInput("not a rational number: '" + text + "'");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    throw InvalidInput("not a rational number: '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw InvalidInput("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace hpzero
