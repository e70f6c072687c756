#include "hpzero/series.hpp"

#include <algorithm>
#include <string>

namespace hpzero {

namespace {

constexpr long long kInf = static_cast<long long>(Series::kExactCap);

int clamp_cap(long long cap) {
  return cap >= kInf ? Series::kExactCap : static_cast<int>(cap);
}

int clamp_val(long long val) {
  if (val >= kInf) return Series::kEmptyVal;
  if (val <= -kInf) return -Series::kEmptyVal;
  return static_cast<int>(val);
}

// Knowledge cap of a product: a coefficient of l*r at exponent e gathers
// contributions with the l-part ranging up to e - val(r), so it is trusted
// only when e - val(r) <= cap(l), and symmetrically.
int product_cap(int cap_l, int val_l, int cap_r, int val_r) {
  long long c1 = cap_l == Series::kExactCap ? kInf : static_cast<long long>(cap_l) + val_r;
  long long c2 = cap_r == Series::kExactCap ? kInf : static_cast<long long>(cap_r) + val_l;
  return clamp_cap(std::min(c1, c2));
}

}  // namespace

void Series::tighten() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0 || it->first > cap_)
      it = c_.erase(it);
    else
      ++it;
  }
  if (c_.empty()) {
    val_ = cap_ == kExactCap ? kEmptyVal : std::max(val_, clamp_val(static_cast<long long>(cap_) + 1));
  } else {
    val_ = std::max(val_, c_.begin()->first);
  }
}

Series Series::term(const Int& coef, int e) {
  Series f;
  if (coef != 0) f.c_[e] = coef;
  f.val_ = e;
  f.cap_ = kExactCap;
  f.tighten();
  return f;
}

Series Series::geometric(int step, int cap) {
  if (step < 1) throw InvalidInput("geometric series needs step >= 1");
  if (cap >= kExactCap) throw InvalidInput("geometric series needs a finite cap");
  Series f;
  f.cap_ = cap;
  f.val_ = 0;
  for (long long e = 0; e <= cap; e += step) f.c_[static_cast<int>(e)] = 1;
  f.tighten();
  return f;
}

Int Series::coeff(int e) const {
  if (e > cap_) throw InvalidInput("coefficient of t^" + std::to_string(e) +
                                   " lies beyond the known window");
  auto it = c_.find(e);
  return it == c_.end() ? Int(0) : it->second;
}

Series& Series::truncate(int cap) {
  cap_ = std::min(cap_, cap);
  tighten();
  return *this;
}

Series Series::shifted(int e) const {
  Series f;
  for (const auto& [exp, coef] : c_) f.c_[exp + e] = coef;
  f.val_ = clamp_val(static_cast<long long>(val_) + e);
  f.cap_ = cap_ == kExactCap ? kExactCap : clamp_cap(static_cast<long long>(cap_) + e);
  return f;
}

Series Series::scaled(const Int& c) const {
  Series f = *this;
  if (c == 0) {
    f.c_.clear();
  } else {
    for (auto& [exp, coef] : f.c_) coef *= c;
  }
  f.tighten();
  return f;
}

Series operator+(const Series& l, const Series& r) {
  Series f;
  f.cap_ = std::min(l.cap_, r.cap_);
  f.val_ = std::min(l.val_, r.val_);
  f.c_ = l.c_;
  for (const auto& [exp, coef] : r.c_) f.c_[exp] += coef;
  f.tighten();
  return f;
}

Series operator-(const Series& l, const Series& r) { return l + (-r); }

Series Series::operator-() const { return scaled(-1); }

Series operator*(const Series& l, const Series& r) {
  Series f;
  if ((l.c_.empty() && l.cap_ == Series::kExactCap) ||
      (r.c_.empty() && r.cap_ == Series::kExactCap))
    return f;  // exact zero
  f.cap_ = product_cap(l.cap_, l.val_, r.cap_, r.val_);
  f.val_ = clamp_val(static_cast<long long>(l.val_) + r.val_);
  for (const auto& [el, cl] : l.c_) {
    if (el + r.val_ > f.cap_) break;
    for (const auto& [er, cr] : r.c_) {
      int e = el + er;
      if (e > f.cap_) break;
      f.c_[e] += cl * cr;
    }
  }
  f.tighten();
  return f;
}

Series& Series::operator+=(const Series& r) { return *this = *this + r; }
Series& Series::operator-=(const Series& r) { return *this = *this - r; }
Series& Series::operator*=(const Series& r) { return *this = *this * r; }

bool operator==(const Series& l, const Series& r) {
  return l.cap_ == r.cap_ && l.c_ == r.c_;
}

bool series_equal_on(const Series& a, const Series& b, int lo, int hi,
                     std::string* why) {
  if (a.known_to() < hi || b.known_to() < hi) {
    if (why)
      *why = "window [" + std::to_string(lo) + "," + std::to_string(hi) +
             "] not covered: known to " + std::to_string(a.known_to()) +
             " and " + std::to_string(b.known_to());
    return false;
  }
  for (auto it = a.terms().lower_bound(lo); it != a.terms().end() && it->first <= hi; ++it) {
    if (b.coeff(it->first) != it->second) {
      if (why) *why = "mismatch at t^" + std::to_string(it->first);
      return false;
    }
  }
  for (auto it = b.terms().lower_bound(lo); it != b.terms().end() && it->first <= hi; ++it) {
    if (a.coeff(it->first) != it->second) {
      if (why) *why = "mismatch at t^" + std::to_string(it->first);
      return false;
    }
  }
  return true;
}

void BiSeries::tighten() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0 || it->first.first > tcap_ || it->first.second > scap_)
      it = c_.erase(it);
    else
      ++it;
  }
  if (c_.empty()) {
    tval_ = tcap_ == kExactCap ? Series::kEmptyVal
                               : std::max(tval_, clamp_val(static_cast<long long>(tcap_) + 1));
    sval_ = scap_ == kExactCap ? Series::kEmptyVal
                               : std::max(sval_, clamp_val(static_cast<long long>(scap_) + 1));
  } else {
    int tmin = c_.begin()->first.first;
    int smin = c_.begin()->first.second;
    for (const auto& [key, coef] : c_) {
      tmin = std::min(tmin, key.first);
      smin = std::min(smin, key.second);
    }
    tval_ = std::max(tval_, tmin);
    sval_ = std::max(sval_, smin);
  }
}

BiSeries BiSeries::term(const Int& coef, int t, int s) {
  if (s < 0) throw InvalidInput("negative s-exponent");
  BiSeries f;
  if (coef != 0) f.c_[{t, s}] = coef;
  f.tval_ = t;
  f.sval_ = s;
  f.tighten();
  return f;
}

BiSeries BiSeries::geometric(int tstep, int sstep, int tcap, int scap) {
  if (sstep < 0 || (sstep == 0 && tstep < 1))
    throw InvalidInput("bad geometric steps");
  if ((sstep == 0 && tcap >= kExactCap) || (sstep > 0 && scap >= kExactCap) ||
      (tstep > 0 && tcap >= kExactCap))
    throw InvalidInput("geometric series needs a finite cap");
  BiSeries f;
  f.tcap_ = tcap;
  f.scap_ = scap;
  for (long long k = 0;; ++k) {
    long long t = k * tstep, s = k * sstep;
    if (t > tcap || s > scap) break;
    f.c_[{static_cast<int>(t), static_cast<int>(s)}] = 1;
    if (tstep == 0 && sstep == 0) break;
  }
  f.tighten();
  return f;
}

BiSeries BiSeries::from_series(const Series& f, int s_exp) {
  if (s_exp < 0) throw InvalidInput("negative s-exponent");
  BiSeries g;
  for (const auto& [e, c] : f.terms()) g.c_[{e, s_exp}] = c;
  g.tval_ = f.valuation_bound();
  g.tcap_ = f.known_to();
  g.sval_ = s_exp;
  g.scap_ = kExactCap;
  g.tighten();
  return g;
}

Int BiSeries::coeff(int t, int s) const {
  if (t > tcap_ || s > scap_)
    throw InvalidInput("coefficient of t^" + std::to_string(t) + " s^" +
                       std::to_string(s) + " lies beyond the known window");
  auto it = c_.find({t, s});
  return it == c_.end() ? Int(0) : it->second;
}

Series BiSeries::s_row(int n) const {
  if (n > scap_) throw InvalidInput("s-row beyond known window");
  Series f;
  f.cap_ = tcap_;
  f.val_ = tval_;
  for (const auto& [key, coef] : c_)
    if (key.second == n) f.c_[key.first] = coef;
  f.tighten();
  return f;
}

BiSeries& BiSeries::truncate(int tcap, int scap) {
  tcap_ = std::min(tcap_, tcap);
  scap_ = std::min(scap_, scap);
  tighten();
  return *this;
}

BiSeries operator+(const BiSeries& l, const BiSeries& r) {
  BiSeries f;
  f.tcap_ = std::min(l.tcap_, r.tcap_);
  f.scap_ = std::min(l.scap_, r.scap_);
  f.tval_ = std::min(l.tval_, r.tval_);
  f.sval_ = std::min(l.sval_, r.sval_);
  f.c_ = l.c_;
  for (const auto& [key, coef] : r.c_) f.c_[key] += coef;
  f.tighten();
  return f;
}

BiSeries operator-(const BiSeries& l, const BiSeries& r) {
  BiSeries neg = r;
  for (auto& [key, coef] : neg.c_) coef = -coef;
  return l + neg;
}

BiSeries operator*(const BiSeries& l, const BiSeries& r) {
  BiSeries f;
  if ((l.c_.empty() && l.tcap_ == BiSeries::kExactCap && l.scap_ == BiSeries::kExactCap) ||
      (r.c_.empty() && r.tcap_ == BiSeries::kExactCap && r.scap_ == BiSeries::kExactCap))
    return f;
  f.tcap_ = product_cap(l.tcap_, l.tval_, r.tcap_, r.tval_);
  f.scap_ = product_cap(l.scap_, l.sval_, r.scap_, r.sval_);
  f.tval_ = clamp_val(static_cast<long long>(l.tval_) + r.tval_);
  f.sval_ = clamp_val(static_cast<long long>(l.sval_) + r.sval_);
  for (const auto& [kl, cl] : l.c_) {
    for (const auto& [kr, cr] : r.c_) {
      int t = kl.first + kr.first;
      int s = kl.second + kr.second;
      if (t > f.tcap_ || s > f.scap_) continue;
      f.c_[{t, s}] += cl * cr;
    }
  }
  f.tighten();
  return f;
}

BiSeries& BiSeries::operator+=(const BiSeries& r) { return *this = *this + r; }
BiSeries& BiSeries::operator-=(const BiSeries& r) { return *this = *this - r; }
BiSeries& BiSeries::operator*=(const BiSeries& r) { return *this = *this * r; }

bool operator==(const BiSeries& l, const BiSeries& r) {
  return l.tcap_ == r.tcap_ && l.scap_ == r.scap_ && l.c_ == r.c_;
}

bool biseries_equal_on(const BiSeries& a, const BiSeries& b, int tmax, int smax,
                       std::string* why) {
  if (a.t_known_to() < tmax || b.t_known_to() < tmax || a.s_known_to() < smax ||
      b.s_known_to() < smax) {
    if (why)
      *why = "window (t<=" + std::to_string(tmax) + ", s<=" + std::to_string(smax) +
             ") not covered: known to (" + std::to_string(a.t_known_to()) + "," +
             std::to_string(a.s_known_to()) + ") and (" +
             std::to_string(b.t_known_to()) + "," + std::to_string(b.s_known_to()) + ")";
    return false;
  }
  auto in_window = [&](const std::pair<int, int>& key) {
    return key.first <= tmax && key.second <= smax;
  };
  for (const auto& [key, coef] : a.terms()) {
    if (in_window(key) && b.coeff(key.first, key.second) != coef) {
      if (why)
        *why = "mismatch at t^" + std::to_string(key.first) + " s^" +
               std::to_string(key.second);
      return false;
    }
  }
  for (const auto& [key, coef] : b.terms()) {
    if (in_window(key) && a.coeff(key.first, key.second) != coef) {
      if (why)
        *why = "mismatch at t^" + std::to_string(key.first) + " s^" +
               std::to_string(key.second);
      return false;
    }
  }
  return true;
}

BiSeries sym_of_bigraded(const BiSeries& L) {
  if (L.t_known_to() >= BiSeries::kExactCap || L.s_known_to() >= BiSeries::kExactCap)
    throw InvalidInput("Sym needs a finite truncation window");
  int tcap = L.t_known_to(), scap = L.s_known_to();
  for (const auto& [key, coef] : L.terms()) {
    if (coef < 0) throw InvalidInput("Sym of a character with negative multiplicity");
    if (key.second == 0) throw InvalidInput("Sym input must have no s^0 terms");
    if (key.first < 0) throw InvalidInput("Sym input must have nonnegative weights");
  }
  BiSeries out = BiSeries::term(1, 0, 0);
  out.truncate(tcap, scap);
  for (const auto& [key, coef] : L.terms()) {
    if (!coef.fits_sint_p()) throw InvalidInput("multiplicity too large");
    BiSeries factor = BiSeries::geometric(key.first, key.second, tcap, scap);
    for (long m = coef.get_si(); m > 0; --m) out *= factor;
  }
  return out;
}

Series sym_power(const Series& H, int k, int cap) {
  std::vector<Series> dp(static_cast<std::size_t>(k) + 1);
  for (auto& f : dp) f.truncate(cap);
  dp[0] = Series::term(1, 0).truncate(cap);
  for (const auto& [w, mult] : H.terms()) {
    if (mult < 0) throw InvalidInput("Sym of a character with negative multiplicity");
    if (w < 0) throw InvalidInput("Sym input must have nonnegative weights");
    if (!mult.fits_sint_p()) throw InvalidInput("multiplicity too large");
    for (long copy = mult.get_si(); copy > 0; --copy) {
      for (int r = 1; r <= k; ++r) {
        dp[r] += dp[r - 1].shifted(w);
        dp[r].truncate(cap);
      }
    }
  }
  return dp[k];
}

}  // namespace hpzero
