#pragma once

#include <algorithm>
#include <iterator>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qhecke/rings.hpp"

namespace qhecke {

using Exp = long long;

// Truncation cap of a series whose every coefficient is known (an exact
// Laurent polynomial). Window arithmetic saturates here instead of demoting
// exact operands to some arbitrary finite order.
inline constexpr Exp kExactCap = std::numeric_limits<Exp>::max() / 4;

inline constexpr Exp sat_cap(Exp cap, Exp shift) {
  Exp s = cap + shift;
  return s > kExactCap ? kExactCap : s;
}

struct SievePart {
  Exp modulus;
  Exp residue;

  SievePart(Exp m, Exp r) : modulus(m), residue(r) {
    if (m < 1) throw std::invalid_argument("sieve modulus must be positive");
    if (r < 0 || r >= m)
      throw std::invalid_argument("sieve residue must lie in [0, modulus)");
  }
};

// Truncated Laurent series over R in the variable q. The coefficient of q^n
// is known for every n < cap(); asking beyond the cap is an error, not a
// silent zero. Stored coefficients cover [lo, lo + size) with nonzero ends.
template <CoeffRing R>
class Series {
 public:
  Series() = default;

  static Series zero(Exp cap = kExactCap) {
    Series s;
    s.cap_ = cap;
    return s;
  }
  static Series constant(R c, Exp cap = kExactCap) {
    return monomial(std::move(c), 0, cap);
  }
  static Series monomial(R c, Exp e, Exp cap = kExactCap) {
    Series s;
    s.cap_ = cap;
    if (!c.is_zero() && e < cap) {
      s.lo_ = e;
      s.c_.push_back(std::move(c));
    }
    return s;
  }
  static Series from_coeffs(Exp lo, std::vector<R> coeffs, Exp cap = kExactCap) {
    Series s;
    s.lo_ = lo;
    s.cap_ = cap;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
  }

  Exp cap() const { return cap_; }
  bool is_exact() const { return cap_ == kExactCap; }
  bool window_is_zero() const { return c_.empty(); }
  Exp min_exp() const {
    if (c_.empty()) throw std::logic_error("min_exp of a series with empty support");
    return lo_;
  }
  Exp max_exp() const {
    if (c_.empty()) throw std::logic_error("max_exp of a series with empty support");
    return lo_ + static_cast<Exp>(c_.size()) - 1;
  }
  // First exponent that could carry a nonzero coefficient; the cap itself
  // when the whole window vanishes.
  Exp lo_effective() const { return c_.empty() ? cap_ : lo_; }

  const R& coeff(Exp n) const {
    if (n >= cap_)
      throw std::out_of_range("coefficient of q^" + std::to_string(n) +
                              " lies beyond the truncation window");
    if (c_.empty() || n < lo_ || n >= lo_ + static_cast<Exp>(c_.size()))
      return zero_elem();
    return c_[static_cast<size_t>(n - lo_)];
  }

  std::vector<std::pair<Exp, R>> terms() const {
    std::vector<std::pair<Exp, R>> out;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) out.emplace_back(lo_ + static_cast<Exp>(i), c_[i]);
    return out;
  }

  Series truncated(Exp new_cap) const {
    Series r = *this;
    r.cap_ = std::min(cap_, new_cap);
    r.normalize();
    return r;
  }

  // Multiplies by the exact monomial c*q^e.
  Series mul_monomial(const R& c, Exp e) const {
    Series r;
    if (c.is_zero()) return r;
    r.cap_ = is_exact() ? kExactCap : sat_cap(cap_, e);
    if (c_.empty()) return r;
    r.lo_ = lo_ + e;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x * c);
    r.normalize();
    return r;
  }

  // Multiplies by the exact binomial (1 - c*q^e), e >= 0.
  Series mul_binomial(const R& c, Exp e) const {
    if (e < 0) throw std::invalid_argument("binomial factor exponent must be nonnegative");
    return *this - mul_monomial(c, e);
  }

  // Divides by (1 - c*q^e), e >= 1. An exact operand must divide exactly;
  // a capped operand picks up the geometric expansion inside its window.
  Series div_binomial(const R& c, Exp e) const {
    if (e < 1) throw std::invalid_argument("binomial divisor exponent must be positive");
    if (c.is_zero() || c_.empty()) return *this;
    Series r = *this;
    size_t step = static_cast<size_t>(e);
    if (is_exact()) {
      size_t len = r.c_.size();
      for (size_t i = step; i < len; ++i) r.c_[i] = r.c_[i] + c * r.c_[i - step];
      size_t tail = std::min(len, step);
      for (size_t i = len - tail; i < len; ++i)
        if (!r.c_[i].is_zero()) throw std::domain_error("inexact polynomial division");
      r.c_.resize(len - tail);
    } else {
      size_t width = static_cast<size_t>(cap_ - lo_);
      r.c_.resize(width);
      for (size_t i = step; i < width; ++i) r.c_[i] = r.c_[i] + c * r.c_[i - step];
    }
    r.normalize();
    return r;
  }

  // Multiplicative inverse as a series, computed out to cap_req (clipped by
  // what the operand's own window can support). Requires a unit leading
  // coefficient. Only monomials can be inverted exactly.
  Series invert_to(Exp cap_req) const {
    if (c_.empty())
      throw std::domain_error("cannot invert a series with no nonzero coefficient in window");
    auto u = c_.front().try_invert();
    if (!u) throw std::domain_error("cannot invert: leading coefficient is not a unit");
    Exp e = lo_;
    Exp cap = std::min(cap_req, is_exact() ? kExactCap : cap_ - 2 * e);
    if (cap == kExactCap) {
      if (c_.size() == 1) return monomial(*u, -e, kExactCap);
      throw std::domain_error("inverting a non-monomial requires a finite truncation order");
    }
    Series r;
    r.cap_ = cap;
    if (-e >= cap) return r;
    size_t width = static_cast<size_t>(cap + e);
    r.lo_ = -e;
    r.c_.assign(width, R{});
    r.c_[0] = *u;
    size_t flen = c_.size();
    for (size_t i = 1; i < width; ++i) {
      R s{};
      size_t jmax = std::min(i, flen - 1);
      for (size_t j = 1; j <= jmax; ++j) {
        if (c_[j].is_zero() || r.c_[i - j].is_zero()) continue;
        s = s + c_[j] * r.c_[i - j];
      }
      if (!s.is_zero()) r.c_[i] = -(*u * s);
    }
    r.normalize();
    return r;
  }

  // Keeps only exponents congruent to part.residue mod part.modulus.
  Series sieve(SievePart part) const {
    Series r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i) {
      Exp n = r.lo_ + static_cast<Exp>(i);
      if (((n % part.modulus) + part.modulus) % part.modulus != part.residue)
        r.c_[i] = R{};
    }
    r.normalize();
    return r;
  }

  // q -> -q.
  Series substitute_neg_q() const {
    Series r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i)
      if ((r.lo_ + static_cast<Exp>(i)) % 2 != 0) r.c_[i] = -r.c_[i];
    return r;
  }

  Series scale(const R& c) const {
    Series r = *this;
    for (auto& x : r.c_) x = x * c;
    r.normalize();
    return r;
  }

  // Applies a coefficient map (typically a ring homomorphism) termwise.
  template <CoeffRing R2, class F>
  Series<R2> map(F&& fn) const {
    Series<R2> r;
    r.lo_ = lo_;
    r.cap_ = cap_;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(fn(x));
    r.normalize();
    return r;
  }

  friend Series operator+(const Series& f, const Series& g) {
    Series r;
    r.cap_ = std::min(f.cap_, g.cap_);
    if (f.c_.empty() && g.c_.empty()) return r;
    Exp lo = f.c_.empty() ? g.lo_ : (g.c_.empty() ? f.lo_ : std::min(f.lo_, g.lo_));
    Exp hi = f.c_.empty() ? g.max_exp()
                          : (g.c_.empty() ? f.max_exp() : std::max(f.max_exp(), g.max_exp()));
    if (r.cap_ != kExactCap) hi = std::min(hi, r.cap_ - 1);
    if (hi < lo) return r;
    r.lo_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo + 1), R{});
    auto accumulate = [&](const Series& s) {
      for (size_t i = 0; i < s.c_.size(); ++i) {
        Exp n = s.lo_ + static_cast<Exp>(i);
        if (n > hi) break;
        size_t k = static_cast<size_t>(n - lo);
        r.c_[k] = r.c_[k] + s.c_[i];
      }
    };
    accumulate(f);
    accumulate(g);
    r.normalize();
    return r;
  }

  friend Series operator-(const Series& f) {
    Series r = f;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Series operator-(const Series& f, const Series& g) { return f + (-g); }

  friend Series operator*(const Series& f, const Series& g) {
    Series r;
    if (f.is_exact() && g.is_exact()) {
      r.cap_ = kExactCap;
    } else {
      r.cap_ = std::min(sat_cap(f.cap_, g.lo_effective()),
                        sat_cap(g.cap_, f.lo_effective()));
    }
    if (f.c_.empty() || g.c_.empty()) return r;
    Exp lo = f.lo_ + g.lo_;
    Exp hi = f.max_exp() + g.max_exp();
    if (r.cap_ != kExactCap) hi = std::min(hi, r.cap_ - 1);
    if (hi < lo) return r;
    r.lo_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo + 1), R{});
    for (size_t i = 0; i < f.c_.size(); ++i) {
      if (f.c_[i].is_zero()) continue;
      Exp base = f.lo_ + static_cast<Exp>(i) + g.lo_;
      if (base > hi) break;
      size_t jmax = std::min(g.c_.size(), static_cast<size_t>(hi - base + 1));
      size_t k0 = static_cast<size_t>(base - lo);
      for (size_t j = 0; j < jmax; ++j) {
        if (g.c_[j].is_zero()) continue;
        r.c_[k0 + j] = r.c_[k0 + j] + f.c_[i] * g.c_[j];
      }
    }
    r.normalize();
    return r;
  }

  friend bool operator==(const Series& f, const Series& g) = default;

 private:
  template <CoeffRing R2>
  friend class Series;

  Exp lo_ = 0;
  Exp cap_ = kExactCap;
  std::vector<R> c_;

  static const R& zero_elem() {
    static const R z{};
    return z;
  }

  // Clips the stored span to the window, then trims zero ends.
  void normalize() {
    if (!c_.empty() && cap_ != kExactCap) {
      if (lo_ >= cap_) c_.clear();
      else if (lo_ + static_cast<Exp>(c_.size()) > cap_)
        c_.resize(static_cast<size_t>(cap_ - lo_));
    }
    size_t b = 0;
    size_t e = c_.size();
    while (b < e && c_[b].is_zero()) ++b;
    while (e > b && c_[e - 1].is_zero()) --e;
    if (b == e) {
      c_.clear();
      lo_ = 0;
      return;
    }
    if (b > 0 || e < c_.size()) {
      std::vector<R> t(std::make_move_iterator(c_.begin() + static_cast<long>(b)),
                       std::make_move_iterator(c_.begin() + static_cast<long>(e)));
      c_ = std::move(t);
      lo_ += static_cast<Exp>(b);
    }
  }
};

// First exponent below up_to where f and g disagree.
template <CoeffRing R>
std::optional<Exp> first_difference(const Series<R>& f, const Series<R>& g, Exp up_to) {
  if (up_to > f.cap() || up_to > g.cap())
    throw std::domain_error("comparison range exceeds a truncation window");
  Exp lo = 0;
  if (!f.window_is_zero()) lo = std::min(lo, f.min_exp());
  if (!g.window_is_zero()) lo = std::min(lo, g.min_exp());
  for (Exp n = lo; n < up_to; ++n)
    if (!(f.coeff(n) == g.coeff(n))) return n;
  return std::nullopt;
}

template <CoeffRing R>
std::optional<Exp> first_difference_exact(const Series<R>& f, const Series<R>& g) {
  if (!f.is_exact() || !g.is_exact())
    throw std::domain_error("exact comparison requires exact polynomials");
  if (f.window_is_zero() && g.window_is_zero()) return std::nullopt;
  Exp lo = f.window_is_zero() ? g.min_exp()
                              : (g.window_is_zero() ? f.min_exp()
                                                    : std::min(f.min_exp(), g.min_exp()));
  Exp hi = f.window_is_zero() ? g.max_exp()
                              : (g.window_is_zero() ? f.max_exp()
                                                    : std::max(f.max_exp(), g.max_exp()));
  for (Exp n = lo; n <= hi; ++n)
    if (!(f.coeff(n) == g.coeff(n))) return n;
  return std::nullopt;
}

// Finite q-Pochhammer (c*q^e; q^base)_n = prod_{j<n} (1 - c*q^{e+base*j}).
template <CoeffRing R>
Series<R> pochhammer(const R& c, Exp e, Exp base, Exp n, Exp trunc = kExactCap) {
  if (base < 1) throw std::invalid_argument("pochhammer base step must be positive");
  if (n < 0) throw std::invalid_argument("pochhammer length must be nonnegative");
  Series<R> acc = Series<R>::constant(R::one(), trunc);
  for (Exp j = 0; j < n; ++j) {
    Exp fe = e + base * j;
    if (trunc != kExactCap && e >= 0 && fe >= trunc) break;
    acc = acc.mul_binomial(c, fe);
  }
  return acc;
}

// Infinite q-Pochhammer (c*q^e; q^base)_inf, truncated at trunc. Needs e >= 1
// so the product converges coefficientwise.
template <CoeffRing R>
Series<R> pochhammer_inf(const R& c, Exp e, Exp base, Exp trunc) {
  if (e < 1)
    throw std::domain_error("infinite product requires factor exponents starting at one");
  if (base < 1) throw std::invalid_argument("pochhammer base step must be positive");
  if (trunc >= kExactCap)
    throw std::invalid_argument("infinite product requires a finite truncation order");
  Series<R> acc = Series<R>::constant(R::one(), trunc);
  for (Exp fe = e; fe < trunc; fe += base) acc = acc.mul_binomial(c, fe);
  return acc;
}

// Gaussian binomial [M, K] in q^base, an exact polynomial; zero outside
// 0 <= K <= M.
inline Series<ZElem> qbinom(Exp M, Exp K, Exp base) {
  if (base < 1) throw std::invalid_argument("q-binomial base step must be positive");
  if (K < 0 || K > M) return Series<ZElem>::zero();
  Series<ZElem> acc = Series<ZElem>::constant(ZElem::one());
  ZElem one = ZElem::one();
  for (Exp j = 1; j <= M - K; ++j)
    acc = acc.mul_binomial(one, base * (K + j)).div_binomial(one, base * j);
  return acc;
}

// Coefficientwise embedding of an integer series into any coefficient ring.
template <CoeffRing R>
Series<R> embed(const Series<ZElem>& f) {
  return f.template map<R>([](const ZElem& z) { return R::from_bigint(z.v); });
}

template <CoeffRing R>
nlohmann::json series_to_json(const Series<R>& f) {
  nlohmann::json j;
  j["ring"] = std::string(R::name());
  j["min_exp"] = f.window_is_zero() ? 0 : f.min_exp();
  if (f.is_exact()) j["trunc"] = nullptr;
  else j["trunc"] = f.cap();
  auto arr = nlohmann::json::array();
  if (!f.window_is_zero())
    for (Exp n = f.min_exp(); n <= f.max_exp(); ++n) arr.push_back(f.coeff(n).str());
  j["coeffs"] = arr;
  return j;
}

template <CoeffRing R>
Series<R> series_from_json(const nlohmann::json& j) {
  std::string ring = j.at("ring").get<std::string>();
  if (ring != R::name())
    throw std::invalid_argument("series ring mismatch: got " + ring);
  Exp lo = j.at("min_exp").get<Exp>();
  Exp cap = j.at("trunc").is_null() ? kExactCap : j.at("trunc").get<Exp>();
  std::vector<R> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.push_back(R::parse(s.get<std::string>()));
  return Series<R>::from_coeffs(lo, std::move(coeffs), cap);
}

inline std::string to_poly_string(const Series<ZElem>& f, std::string_view var = "q") {
  std::vector<std::pair<long long, BigInt>> terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_back(e, c.v);
  return detail::render_terms(terms, var);
}

}  // namespace qhecke
