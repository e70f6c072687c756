#include "hpzero/poly.hpp"

#include <algorithm>

#include "hpzero/errors.hpp"

namespace hpzero {

SparsePolynomial SparsePolynomial::constant(const Rational& c) {
  return monomial(c, Monomial{});
}

SparsePolynomial SparsePolynomial::monomial(const Rational& c, const Monomial& m) {
  SparsePolynomial p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

SparsePolynomial SparsePolynomial::variable(Var v) {
  Monomial m;
  switch (v) {
    case Var::x: m.i = 1; break;
    case Var::y: m.j = 1; break;
    case Var::z: m.k = 1; break;
  }
  return monomial(1, m);
}

Rational SparsePolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& SparsePolynomial::leading_monomial() const {
  if (terms_.empty()) throw InvalidInput("leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& SparsePolynomial::leading_coeff() const {
  if (terms_.empty()) throw InvalidInput("leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

void SparsePolynomial::add_term(const Rational& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

SparsePolynomial operator+(const SparsePolynomial& l, const SparsePolynomial& r) {
  SparsePolynomial p = l;
  p += r;
  return p;
}

SparsePolynomial operator-(const SparsePolynomial& l, const SparsePolynomial& r) {
  SparsePolynomial p = l;
  p -= r;
  return p;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& r) {
  for (const auto& [m, c] : r.terms_) add_term(c, m);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& r) {
  for (const auto& [m, c] : r.terms_) add_term(-c, m);
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& l, const SparsePolynomial& r) {
  SparsePolynomial p;
  for (const auto& [ml, cl] : l.terms())
    for (const auto& [mr, cr] : r.terms()) p.add_term(cl * cr, ml * mr);
  return p;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const {
  SparsePolynomial p;
  if (c == 0) return p;
  for (const auto& [m, coef] : terms_) p.terms_[m] = coef * c;
  return p;
}

std::optional<int> SparsePolynomial::homogeneous_weight(const WeightSystem& ws) const {
  if (terms_.empty()) return 0;
  int w = weight(terms_.begin()->first, ws);
  for (const auto& [m, c] : terms_)
    if (weight(m, ws) != w) return std::nullopt;
  return w;
}

std::string SparsePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      out += to_string(abs);
    } else {
      if (abs != 1) out += to_string(abs) + "*";
      out += to_string(m);
    }
  }
  return out;
}

SparsePolynomial partial(const SparsePolynomial& p, Var v) {
  SparsePolynomial out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exp(v);
    if (e == 0) continue;
    Monomial n = m;
    switch (v) {
      case Var::x: n.i -= 1; break;
      case Var::y: n.j -= 1; break;
      case Var::z: n.k -= 1; break;
    }
    out.add_term(c * e, n);
  }
  return out;
}

SparsePolynomial normal_form(const SparsePolynomial& p, const SparsePolynomial& Q) {
  if (Q.is_zero()) throw InvalidInput("normal form modulo the zero polynomial");
  const Monomial& lm = Q.leading_monomial();
  const Rational& lc = Q.leading_coeff();
  SparsePolynomial rem;
  SparsePolynomial work = p;
  while (!work.is_zero()) {
    const Monomial m = work.leading_monomial();
    const Rational c = work.leading_coeff();
    if (lm.divides(m)) {
      // Cancel the leading term; everything introduced is lex-smaller.
      work -= Q.scaled(c / lc) * SparsePolynomial::monomial(1, lm.quotient_of(m));
    } else {
      rem.add_term(c, m);
      work -= SparsePolynomial::monomial(c, m);
    }
  }
  return rem;
}

std::vector<Monomial> ambient_basis(const WeightSystem& ws, int w) {
  std::vector<Monomial> out;
  if (w < 0) return out;
  for (int i = 0; i * ws.a <= w; ++i)
    for (int j = 0; i * ws.a + j * ws.b <= w; ++j) {
      int rest = w - i * ws.a - j * ws.b;
      if (rest % ws.c == 0) out.push_back({i, j, rest / ws.c});
    }
  std::sort(out.begin(), out.end(),
            [](const Monomial& l, const Monomial& r) { return lex_less(r, l); });
  return out;
}

std::vector<Monomial> graded_basis(const WeightSystem& ws, const SparsePolynomial& Q,
                                   int w) {
  if (Q.is_zero()) throw InvalidInput("graded basis modulo the zero polynomial");
  const Monomial& lm = Q.leading_monomial();
  std::vector<Monomial> out;
  for (const Monomial& m : ambient_basis(ws, w))
    if (!lm.divides(m)) out.push_back(m);
  return out;
}

Series hilbert_OX(const WeightSystem& ws, int max_w) {
  Series numerator = Series::term(1, 0) - Series::term(1, ws.d);
  return numerator * Series::geometric(ws.a, max_w) * Series::geometric(ws.b, max_w) *
         Series::geometric(ws.c, max_w);
}

}  // namespace hpzero
