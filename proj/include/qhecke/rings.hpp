#pragma once

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhecke/bigint.hpp"

namespace qhecke {

// Every coefficient ring is a regular value type with exact arithmetic, a
// canonical zero (the default-constructed value), and an optional unit inverse.
template <class R>
concept CoeffRing =
    std::regular<R> &&
    requires(const R x, const R y, long long n, const BigInt& b) {
      { R::one() } -> std::same_as<R>;
      { R::from_int(n) } -> std::same_as<R>;
      { R::from_bigint(b) } -> std::same_as<R>;
      { x + y } -> std::same_as<R>;
      { x - y } -> std::same_as<R>;
      { x * y } -> std::same_as<R>;
      { -x } -> std::same_as<R>;
      { x.is_zero() } -> std::convertible_to<bool>;
      { x.try_invert() } -> std::same_as<std::optional<R>>;
      { x.str() } -> std::same_as<std::string>;
      { R::name() } -> std::same_as<std::string_view>;
    };

namespace detail {

// Shared sparse-polynomial text grammar: terms "c", "v^e" or "c*v^e" joined by
// " + " / " - ", exponents printed raw (v^-2, v^1). Used for Laurent elements
// and for q-polynomial table rows.
std::string render_terms(const std::vector<std::pair<long long, BigInt>>& terms,
                         std::string_view var);
std::vector<std::pair<long long, BigInt>> parse_terms(std::string_view text,
                                                      std::string_view var);

// Degree-one grammar for cyclotomic elements: "c0", "c1*g", "c0 + c1*g".
std::string render_linear(const BigInt& c0, const BigInt& c1, std::string_view gen);
std::pair<BigInt, BigInt> parse_linear(std::string_view text, std::string_view gen);

}  // namespace detail

struct ZElem {
  BigInt v;

  ZElem() = default;
  explicit ZElem(BigInt x) : v(std::move(x)) {}
  explicit ZElem(long long x) : v(x) {}

  static ZElem one() { return ZElem(1); }
  static ZElem from_int(long long n) { return ZElem(n); }
  static ZElem from_bigint(const BigInt& b) { return ZElem(b); }
  static std::string_view name() { return std::string_view{"integers"}; }

  bool is_zero() const { return v.is_zero(); }
  std::optional<ZElem> try_invert() const {
    if (v == 1 || v == -1) return *this;
    return std::nullopt;
  }
  std::string str() const { return v.str(); }
  static ZElem parse(std::string_view text);

  friend ZElem operator+(const ZElem& x, const ZElem& y) { return ZElem(x.v + y.v); }
  friend ZElem operator-(const ZElem& x, const ZElem& y) { return ZElem(x.v - y.v); }
  friend ZElem operator*(const ZElem& x, const ZElem& y) { return ZElem(x.v * y.v); }
  friend ZElem operator-(const ZElem& x) { return ZElem(-x.v); }
  friend bool operator==(const ZElem& x, const ZElem& y) { return x.v == y.v; }
};

// Laurent polynomials in the parameter a with integer coefficients, stored
// densely over the exponent span [off, off + size). Canonical form keeps the
// first and last stored coefficients nonzero; zero is the empty vector.
class LaurentA {
 public:
  LaurentA() = default;

  static LaurentA one() { return monomial(BigInt(1), 0); }
  static LaurentA from_int(long long n) { return monomial(BigInt(n), 0); }
  static LaurentA from_bigint(const BigInt& b) { return monomial(b, 0); }
  static LaurentA monomial(BigInt c, long long e);
  static LaurentA gen() { return monomial(BigInt(1), 1); }
  static std::string_view name() { return std::string_view{"laurent_a"}; }
  static LaurentA parse(std::string_view text);

  bool is_zero() const { return c_.empty(); }
  long long lo_exp() const;
  long long hi_exp() const;
  const BigInt& at(long long e) const;

  LaurentA invert_a() const;
  LaurentA negate_a() const;
  std::optional<LaurentA> try_invert() const;
  std::string str() const;

  friend LaurentA operator+(const LaurentA& x, const LaurentA& y);
  friend LaurentA operator-(const LaurentA& x, const LaurentA& y);
  friend LaurentA operator*(const LaurentA& x, const LaurentA& y);
  friend LaurentA operator-(const LaurentA& x);
  friend bool operator==(const LaurentA& x, const LaurentA& y) = default;

 private:
  long long off_ = 0;
  std::vector<BigInt> c_;

  void normalize();
};

enum class CycloMod { gauss, prim6, prim3 };

// Quotient ring Z[x]/(x^2 - Q x - P) in reduced form c0 + c1*x, with
// x^2 = P + Q x. gauss: x^2 = -1 (x = i); prim6: x^2 = x - 1 (x = e^{i pi/3});
// prim3: x^2 = -x - 1 (x = e^{2 i pi/3}).
template <CycloMod M>
class Cyclo {
 public:
  static constexpr int P = -1;
  static constexpr int Q = (M == CycloMod::gauss) ? 0 : (M == CycloMod::prim6 ? 1 : -1);

  Cyclo() = default;
  Cyclo(BigInt c0, BigInt c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

  static Cyclo one() { return Cyclo(BigInt(1), BigInt(0)); }
  static Cyclo from_int(long long n) { return Cyclo(BigInt(n), BigInt(0)); }
  static Cyclo from_bigint(const BigInt& b) { return Cyclo(b, BigInt(0)); }
  static Cyclo gen() { return Cyclo(BigInt(0), BigInt(1)); }
  static std::string_view name() {
    if constexpr (M == CycloMod::gauss) return std::string_view{"gauss"};
    else if constexpr (M == CycloMod::prim6) return std::string_view{"prim6"};
    else return std::string_view{"prim3"};
  }
  static std::string_view gen_name() {
    if constexpr (M == CycloMod::gauss) return std::string_view{"i"};
    else if constexpr (M == CycloMod::prim6) return std::string_view{"rho"};
    else return std::string_view{"omega"};
  }

  const BigInt& c0() const { return c0_; }
  const BigInt& c1() const { return c1_; }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

  std::optional<Cyclo> try_invert() const {
    BigInt det = c0_ * c0_ + Q * c0_ * c1_ - P * c1_ * c1_;
    if (det.is_zero()) return std::nullopt;
    BigInt n0 = c0_ + Q * c1_;
    BigInt n1 = -c1_;
    if (n0 % det != 0 || n1 % det != 0) return std::nullopt;
    return Cyclo(n0 / det, n1 / det);
  }

  std::string str() const { return detail::render_linear(c0_, c1_, gen_name()); }
  static Cyclo parse(std::string_view text) {
    auto [a, b] = detail::parse_linear(text, gen_name());
    return Cyclo(std::move(a), std::move(b));
  }

  friend Cyclo operator+(const Cyclo& x, const Cyclo& y) {
    return Cyclo(x.c0_ + y.c0_, x.c1_ + y.c1_);
  }
  friend Cyclo operator-(const Cyclo& x, const Cyclo& y) {
    return Cyclo(x.c0_ - y.c0_, x.c1_ - y.c1_);
  }
  friend Cyclo operator*(const Cyclo& x, const Cyclo& y) {
    BigInt t = x.c1_ * y.c1_;
    return Cyclo(x.c0_ * y.c0_ + P * t, x.c0_ * y.c1_ + x.c1_ * y.c0_ + Q * t);
  }
  friend Cyclo operator-(const Cyclo& x) { return Cyclo(-x.c0_, -x.c1_); }
  friend bool operator==(const Cyclo& x, const Cyclo& y) = default;

 private:
  BigInt c0_;
  BigInt c1_;
};

using GaussInt = Cyclo<CycloMod::gauss>;
using Prim6Int = Cyclo<CycloMod::prim6>;
using Prim3Int = Cyclo<CycloMod::prim3>;

// Evaluates a Laurent polynomial in a at a unit image of the target ring,
// sending a^-1 to the inverse of the image.
template <CoeffRing R>
R specialize_a(const LaurentA& x, const R& image) {
  auto inv = image.try_invert();
  if (!inv) throw std::domain_error("specialize_a: image must be a unit of the target ring");
  R acc{};
  if (x.is_zero()) return acc;
  long long lo = x.lo_exp();
  long long hi = x.hi_exp();
  if (hi >= 0) {
    R p = R::one();
    for (long long e = 0; e <= hi; ++e) {
      const BigInt& c = x.at(e);
      if (!c.is_zero()) acc = acc + R::from_bigint(c) * p;
      if (e < hi) p = p * image;
    }
  }
  if (lo < 0) {
    R p = *inv;
    for (long long e = -1; e >= lo; --e) {
      const BigInt& c = x.at(e);
      if (!c.is_zero()) acc = acc + R::from_bigint(c) * p;
      if (e > lo) p = p * (*inv);
    }
  }
  return acc;
}

static_assert(CoeffRing<ZElem>);
static_assert(CoeffRing<LaurentA>);
static_assert(CoeffRing<GaussInt>);
static_assert(CoeffRing<Prim6Int>);
static_assert(CoeffRing<Prim3Int>);

}  // namespace qhecke
