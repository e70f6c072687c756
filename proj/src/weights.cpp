#include "hpzero/weights.hpp"

namespace hpzero {

WeightSystem::WeightSystem(int a_, int b_, int c_, int d_)
    : a(a_), b(b_), c(c_), d(d_), kappa(d_ - (a_ + b_ + c_)) {
  if (a < 1 || a > b || b > c)
    throw InvalidInput("weights must satisfy 1 <= a <= b <= c");
}

int WeightSystem::var_weight(Var v) const {
  switch (v) {
    case Var::x: return a;
    case Var::y: return b;
    case Var::z: return c;
  }
  return 0;
}

bool Monomial::divides(const Monomial& m) const {
  return i <= m.i && j <= m.j && k <= m.k;
}

Monomial Monomial::operator*(const Monomial& m) const {
  return {i + m.i, j + m.j, k + m.k};
}

Monomial Monomial::quotient_of(const Monomial& m) const {
  return {m.i - i, m.j - j, m.k - k};
}

int Monomial::exp(Var v) const {
  switch (v) {
    case Var::x: return i;
    case Var::y: return j;
    case Var::z: return k;
  }
  return 0;
}

int weight(const Monomial& m, const WeightSystem& ws) {
  return m.i * ws.a + m.j * ws.b + m.k * ws.c;
}

bool lex_less(const Monomial& l, const Monomial& r) {
  if (l.k != r.k) return l.k < r.k;
  if (l.j != r.j) return l.j < r.j;
  return l.i < r.i;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  auto piece = [&out](const char* v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  piece("x", m.i);
  piece("y", m.j);
  piece("z", m.k);
  return out;
}

}  // namespace hpzero
