#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hpzero/errors.hpp"
#include "hpzero/rational.hpp"

namespace hpzero {

/*
 * Truncated integer series with window tracking.
 *
 * A Series value represents a Laurent series in t of which we know all
 * coefficients with exponent <= known_to(), together with the guarantee that
 * the true series has no support below valuation_bound().  known_to() equal
 * to kExactCap means the stored terms are the whole series (a Laurent
 * polynomial).  Arithmetic propagates both bounds, so the window on which a
 * product or sum is trustworthy never has to be reasoned about by callers:
 * ask known_to() afterwards.  Comparisons are only made inside the common
 * window, and report it.
 *
 * BiSeries is the bivariate analogue in (t, s).  The s-variable is an honest
 * power-series variable: exponents are >= 0.  Knowledge regions are
 * rectangles t <= t_known_to(), s <= s_known_to(), which compose under
 * multiplication as
 *     cap(AB) = min(cap(A) + val(B), cap(B) + val(A))
 * separately in each variable.
 */
class Series {
 public:
  static constexpr int kExactCap = 1 << 28;
  static constexpr int kEmptyVal = 1 << 28;

  Series() = default;  // zero, exact

  static Series term(const Int& coef, int e);
  // 1/(1 - t^step) expanded through t^cap; step >= 1.
  static Series geometric(int step, int cap);

  const std::map<int, Int>& terms() const { return c_; }
  Int coeff(int e) const;
  bool stored_empty() const { return c_.empty(); }

  int valuation_bound() const { return val_; }
  int known_to() const { return cap_; }
  bool is_exact() const { return cap_ == kExactCap; }

  Series& truncate(int cap);
  Series shifted(int e) const;
  Series scaled(const Int& c) const;

  friend Series operator+(const Series& l, const Series& r);
  friend Series operator-(const Series& l, const Series& r);
  friend Series operator*(const Series& l, const Series& r);
  Series operator-() const;
  Series& operator+=(const Series& r);
  Series& operator-=(const Series& r);
  Series& operator*=(const Series& r);

  friend bool operator==(const Series& l, const Series& r);  // terms and window

 private:
  std::map<int, Int> c_;
  int val_ = 0;
  int cap_ = kExactCap;

  void tighten();
  friend class BiSeries;
};

// True when both sides are known on [lo, hi] and their coefficients agree
// there.  On failure *why (if given) says whether the window was uncovered or
// which exponent disagreed.
bool series_equal_on(const Series& a, const Series& b, int lo, int hi,
                     std::string* why = nullptr);

class BiSeries {
 public:
  static constexpr int kExactCap = Series::kExactCap;

  BiSeries() = default;  // zero, exact

  static BiSeries term(const Int& coef, int t, int s);
  // 1/(1 - t^tstep s^sstep) expanded through the given caps.
  // Requires sstep >= 0 and (tstep, sstep) != (0, 0); if sstep == 0 then
  // tstep >= 1.
  static BiSeries geometric(int tstep, int sstep, int tcap, int scap);
  // Places a univariate series on the row s^s_exp.
  static BiSeries from_series(const Series& f, int s_exp);

  const std::map<std::pair<int, int>, Int>& terms() const { return c_; }
  Int coeff(int t, int s) const;

  int t_valuation_bound() const { return tval_; }
  int t_known_to() const { return tcap_; }
  int s_valuation_bound() const { return sval_; }
  int s_known_to() const { return scap_; }

  // Row of s^n as a univariate series in t; requires n <= s_known_to().
  Series s_row(int n) const;

  BiSeries& truncate(int tcap, int scap);

  friend BiSeries operator+(const BiSeries& l, const BiSeries& r);
  friend BiSeries operator-(const BiSeries& l, const BiSeries& r);
  friend BiSeries operator*(const BiSeries& l, const BiSeries& r);
  BiSeries& operator+=(const BiSeries& r);
  BiSeries& operator-=(const BiSeries& r);
  BiSeries& operator*=(const BiSeries& r);

  friend bool operator==(const BiSeries& l, const BiSeries& r);

 private:
  std::map<std::pair<int, int>, Int> c_;
  int tval_ = 0;
  int tcap_ = kExactCap;
  int sval_ = 0;
  int scap_ = kExactCap;

  void tighten();
};

bool biseries_equal_on(const BiSeries& a, const BiSeries& b, int tmax, int smax,
                       std::string* why = nullptr);

// Plethystic symmetric algebra of a bigraded multiplicity series:
//   Sym(L) = prod over terms L[w][n] of (1 - t^w s^n)^(-L[w][n]).
// Requires every stored coefficient >= 0, no s^0 terms, and no negative
// t-exponents.  The result is known on L's window.
BiSeries sym_of_bigraded(const BiSeries& L);

// Coefficient of u^k in prod_w (1 - u t^w)^(-H[w]), i.e. the character of the
// k-th symmetric power of a graded space with Hilbert series H.  H is taken
// as an exact finite sum (its stored terms), with coefficients >= 0.
Series sym_power(const Series& H, int k, int cap);

}  // namespace hpzero
