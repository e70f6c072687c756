#pragma once

#include <gmpxx.h>

#include <string>

namespace hpzero {

using Int = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" in base 10.  Throws InvalidInput on anything
// else (including q = 0).  The result is canonicalized.
Rational parse_rational(const std::string& text);

std::string to_string(const Int& n);
std::string to_string(const Rational& q);

}  // namespace hpzero
