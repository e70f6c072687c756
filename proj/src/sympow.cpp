#include "hpzero/sympow.hpp"

#include <algorithm>
#include <map>

namespace hpzero {

SymBasisElement::SymBasisElement(std::vector<Monomial> f) : factors(std::move(f)) {
  std::sort(factors.begin(), factors.end(), MonomialLexLess{});
}

int SymBasisElement::weight(const WeightSystem& ws) const {
  int w = 0;
  for (const Monomial& m : factors) w += hpzero::weight(m, ws);
  return w;
}

bool operator<(const SymBasisElement& l, const SymBasisElement& r) {
  return std::lexicographical_compare(l.factors.begin(), l.factors.end(),
                                      r.factors.begin(), r.factors.end(),
                                      MonomialLexLess{});
}

std::string SymBasisElement::str() const {
  std::string out;
  for (const Monomial& m : factors) {
    if (!out.empty()) out += " & ";
    out += to_string(m);
  }
  return out.empty() ? "()" : out;
}

namespace {

// Positive-weight normal-form monomials of weight 1..max_w, grouped by
// weight; flattened with a stable global order (weight, then lex descending
// to match graded_basis).
struct PositiveBasis {
  std::vector<Monomial> monomials;
  std::vector<int> weights;
};

PositiveBasis positive_basis(const SurfaceSpec& spec, int max_w) {
  PositiveBasis pb;
  for (int w = 1; w <= max_w; ++w)
    for (const Monomial& m : graded_basis(spec.ws, spec.Q, w)) {
      pb.monomials.push_back(m);
      pb.weights.push_back(w);
    }
  return pb;
}

void enumerate(const PositiveBasis& pb, std::size_t from, int slots, int w,
               std::vector<Monomial>& stack, std::vector<SymBasisElement>& out) {
  if (w == 0) {
    // Pad with copies of the weight-0 monomial 1.
    std::vector<Monomial> factors = stack;
    factors.resize(factors.size() + slots, Monomial{});
    out.emplace_back(std::move(factors));
    return;
  }
  if (slots == 0) return;
  for (std::size_t idx = from; idx < pb.monomials.size(); ++idx) {
    if (pb.weights[idx] > w) continue;
    stack.push_back(pb.monomials[idx]);
    enumerate(pb, idx, slots - 1, w - pb.weights[idx], stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<SymBasisElement> sym_basis(const SurfaceSpec& spec, int n, int w) {
  std::vector<SymBasisElement> out;
  if (n < 0 || w < 0) return out;
  if (n == 0) {
    if (w == 0) out.emplace_back(std::vector<Monomial>{});
    return out;
  }
  PositiveBasis pb = positive_basis(spec, w);
  std::vector<Monomial> stack;
  enumerate(pb, 0, n, w, stack, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<SymBasisElement, Rational> xi_action(const Monomial& f, const SymBasisElement& e,
                                              const SurfaceSpec& spec) {
  return xi_action_poly(SparsePolynomial::monomial(1, f), e, spec);
}

std::map<SymBasisElement, Rational> xi_action_poly(const SparsePolynomial& f,
                                                   const SymBasisElement& e,
                                                   const SurfaceSpec& spec) {
  std::map<SymBasisElement, Rational> out;
  // Group equal factors: a factor of multiplicity r is hit r times by the
  // slot-wise derivation.
  std::map<Monomial, int, MonomialLexLess> mult;
  for (const Monomial& v : e.factors) mult[v] += 1;
  for (const auto& [v, r] : mult) {
    SparsePolynomial br = bracket(f, SparsePolynomial::monomial(1, v), spec);
    if (br.is_zero()) continue;
    std::vector<Monomial> base;
    base.reserve(e.factors.size() - 1);
    bool removed = false;
    for (const Monomial& u : e.factors) {
      if (!removed && u == v) {
        removed = true;
        continue;
      }
      base.push_back(u);
    }
    for (const auto& [m, c] : br.terms()) {
      std::vector<Monomial> factors = base;
      factors.push_back(m);
      SymBasisElement target(std::move(factors));
      auto [it, inserted] = out.emplace(std::move(target), c * r);
      if (!inserted) it->second += c * r;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace hpzero
