#include "qhecke/identities.hpp"

#include <functional>

namespace qhecke {
namespace {

const ZElem kOne = ZElem::one();

Series<ZElem> euler4(Exp order) { return pochhammer_inf(kOne, 4, 4, order); }

ZElem int_sign(Exp n) { return n % 2 == 0 ? kOne : ZElem(-1); }

LaurentA paired_power(Exp k) {
  return LaurentA::monomial(BigInt(1), k) + LaurentA::monomial(BigInt(1), -k);
}

}  // namespace

Series<LaurentA> build_S_a(Exp order) { return build_S_at(LaurentA::gen(), order); }

Series<LaurentA> build_P_a(Exp order) { return build_P_at(LaurentA::gen(), order); }

Series<LaurentA> rhs_even(Exp order) {
  auto acc = Series<LaurentA>::zero(order);
  for (Exp n = 0; 4 * n * n + 4 * n < order; ++n) {
    auto inner = Series<LaurentA>::constant(LaurentA::one());
    for (Exp j = 1; j <= n; ++j) {
      LaurentA w = paired_power(2 * j);
      if (j % 2 != 0) w = -w;
      inner = inner + Series<LaurentA>::monomial(w, -2 * j * j);
    }
    LaurentA sgn = LaurentA::from_int(n % 2 == 0 ? 1 : -1);
    auto pref = Series<LaurentA>::monomial(sgn, 6 * n * n + 4 * n) +
                Series<LaurentA>::monomial(sgn, 6 * n * n + 8 * n + 2);
    acc = acc + (pref * inner).truncated(order);
  }
  return acc;
}

Series<LaurentA> rhs_odd(Exp order) {
  auto acc = Series<LaurentA>::zero(order);
  for (Exp n = 0; 4 * n * n + 8 * n + 3 < order; ++n) {
    auto inner = Series<LaurentA>::zero();
    for (Exp j = 0; j <= n; ++j) {
      LaurentA w = paired_power(2 * j + 1);
      if (j % 2 != 0) w = -w;
      inner = inner + Series<LaurentA>::monomial(w, -2 * j * (j + 1));
    }
    LaurentA sgn = LaurentA::from_int(n % 2 == 0 ? -1 : 1);
    auto pref = Series<LaurentA>::monomial(sgn, 6 * n * n + 10 * n + 3) +
                Series<LaurentA>::monomial(sgn, 6 * n * n + 14 * n + 7);
    acc = acc + (pref * inner).truncated(order);
  }
  return acc;
}

Series<ZElem> pentagonal_poly_def(Exp N) {
  if (N < 0) throw std::invalid_argument("pentagonal index must be nonnegative");
  auto binom = Series<ZElem>::constant(kOne);
  auto acc = Series<ZElem>::zero();
  for (Exp j = 0; 2 * j <= N; ++j) {
    if (j > 0)
      binom = binom.mul_binomial(kOne, N - 2 * j + 1)
                   .mul_binomial(kOne, N - 2 * j + 2)
                   .div_binomial(kOne, N - j + 1)
                   .div_binomial(kOne, j);
    acc = acc + binom.mul_monomial(int_sign(j), j * (3 * j + 1 - 2 * N) / 2);
  }
  return acc;
}

Series<ZElem> pentagonal_poly_closed(Exp N) {
  if (N < 0) throw std::invalid_argument("pentagonal index must be nonnegative");
  Exp s = N / 3;
  switch (N % 3) {
    case 0: return Series<ZElem>::monomial(int_sign(s), -s * (3 * s - 1) / 2);
    case 1: return Series<ZElem>::monomial(int_sign(s), -s * (3 * s + 1) / 2);
    default: return Series<ZElem>::zero();
  }
}

std::vector<Series<ZElem>> build_L(Exp z_degree, Exp q_order) {
  if (z_degree < 0) throw std::invalid_argument("z degree must be nonnegative");
  auto e1 = pochhammer_inf(kOne, 1, 1, q_order);
  std::vector<Series<ZElem>> out;
  out.reserve(static_cast<size_t>(z_degree) + 1);
  for (Exp N = 0; N <= z_degree; ++N) {
    auto acc = Series<ZElem>::zero(q_order);
    for (Exp j = 0; 2 * j <= N; ++j) {
      Exp v = N - 2 * j;
      Exp ej = j * (j - 1) / 2 + v * (v - 1) / 2 + (N - j) * (j + 1) + j;
      auto term = Series<ZElem>::monomial(kOne, ej, q_order);
      for (Exp i = 1; i <= j; ++i) term = term.div_binomial(kOne, i);
      for (Exp i = 1; i <= v; ++i) term = term.div_binomial(kOne, i);
      auto inner = Series<ZElem>::constant(kOne, q_order);
      auto t = Series<ZElem>::constant(kOne, q_order);
      Exp step = N - j + 1;
      for (Exp ell = 1; step * ell < q_order; ++ell) {
        t = t.mul_monomial(kOne, step).truncated(q_order).div_binomial(kOne, ell);
        inner = inner + t;
      }
      term = term * inner;
      if (j % 2 != 0) term = -term;
      acc = acc + term;
    }
    out.push_back(acc * e1);
  }
  return out;
}

Series<LaurentA> macmahon_lhs(Exp M, Exp N) {
  if (M < 0 || N < 0) throw std::invalid_argument("product lengths must be nonnegative");
  return pochhammer(LaurentA::gen(), 1, 1, M) *
         pochhammer(LaurentA::monomial(BigInt(1), -1), 0, 1, N);
}

Series<LaurentA> macmahon_rhs(Exp M, Exp N) {
  if (M < 0 || N < 0) throw std::invalid_argument("product lengths must be nonnegative");
  auto acc = Series<LaurentA>::zero();
  for (Exp j = -N; j <= M; ++j) {
    LaurentA w = LaurentA::monomial(BigInt(j % 2 == 0 ? 1 : -1), j);
    acc = acc + embed<LaurentA>(qbinom(M + N, N + j, 1)).mul_monomial(w, j * (j + 1) / 2);
  }
  return acc;
}

Series<LaurentA> finite_jacobi_product(Exp N) {
  if (N < 0) throw std::invalid_argument("product length must be nonnegative");
  return pochhammer(LaurentA::gen(), 1, 2, N) *
         pochhammer(LaurentA::monomial(BigInt(1), -1), 1, 2, N);
}

Series<LaurentA> finite_jacobi_sum(Exp N) {
  if (N < 0) throw std::invalid_argument("product length must be nonnegative");
  auto acc = Series<LaurentA>::zero();
  for (Exp h = -N; h <= N; ++h) {
    LaurentA w = LaurentA::monomial(BigInt(h % 2 == 0 ? 1 : -1), h);
    acc = acc + embed<LaurentA>(qbinom(2 * N, N + h, 2)).mul_monomial(w, h * h);
  }
  return acc;
}

Series<LaurentA> alpha(Exp R) {
  if (R < 0) throw std::invalid_argument("alpha index must be nonnegative");
  if (R == 0) return Series<LaurentA>::constant(LaurentA::one());
  LaurentA w = paired_power(R);
  if (R % 2 != 0) w = -w;
  return Series<LaurentA>::monomial(w, R * R);
}

Series<LaurentA> beta(Exp N, Exp order) {
  if (N < 0) throw std::invalid_argument("beta index must be nonnegative");
  auto num = finite_jacobi_product(N).truncated(order);
  return num * pochhammer(LaurentA::one(), 2, 2, 2 * N).invert_to(order);
}

Series<ZElem> delta(Exp N, Exp order) {
  if (N < 0) throw std::invalid_argument("delta index must be nonnegative");
  auto d = euler4(order) * pochhammer(kOne, 2, 2, 2 * N);
  for (Exp j = 1; j <= N; ++j) d = d.div_binomial(ZElem(-1), 2 * j);
  return d.mul_monomial(kOne, 2 * N).truncated(order);
}

Series<ZElem> gamma_tail(Exp R, Exp order) {
  if (R < 0) throw std::invalid_argument("gamma index must be nonnegative");
  auto term = euler4(order);
  for (Exp i = 1; i <= R; ++i) term = term.div_binomial(ZElem(-1), 2 * i);
  term = term.mul_monomial(kOne, 2 * R).truncated(order);
  auto acc = Series<ZElem>::zero(order);
  for (Exp n = R; 2 * n < order; ++n) {
    if (n > R)
      term = term.mul_binomial(kOne, 4 * n - 2)
                 .mul_binomial(kOne, 4 * n)
                 .mul_monomial(kOne, 2)
                 .truncated(order)
                 .div_binomial(ZElem(-1), 2 * n)
                 .div_binomial(kOne, 2 * (n - R))
                 .div_binomial(kOne, 2 * (n + R));
    acc = acc + term;
  }
  return acc;
}

Series<ZElem> gamma_closed(Exp R, Exp order) {
  if (R < 0) throw std::invalid_argument("gamma index must be nonnegative");
  auto acc = Series<ZElem>::zero(order);
  for (Exp s = 0;; ++s) {
    Exp e = 2 * R + 6 * s * s + (6 * R + 4) * s;
    if (e >= order) break;
    ZElem sgn = int_sign(s);
    acc = acc + Series<ZElem>::monomial(sgn, e, order);
    acc = acc + Series<ZElem>::monomial(sgn, e + 2 * R + 4 * s + 2, order);
  }
  return acc;
}

Series<LaurentA> master_sum(Exp order) {
  auto acc = Series<LaurentA>::zero(order);
  for (Exp h = 0; h * h + 2 * h < order; ++h) {
    auto gh = embed<LaurentA>(gamma_closed(h, order - h * h));
    if (h == 0) {
      acc = acc + gh;
      continue;
    }
    LaurentA w = paired_power(h);
    if (h % 2 != 0) w = -w;
    acc = acc + gh.mul_monomial(w, h * h);
  }
  return acc;
}

Series<LaurentA> master_sum_parity(Exp order, int parity) {
  if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  auto acc = Series<LaurentA>::zero(order);
  for (Exp h = 0; h * h + 2 * h < order; ++h) {
    if (h % 2 != parity) continue;
    auto gh = embed<LaurentA>(gamma_closed(h, order - h * h));
    if (h == 0) {
      acc = acc + gh;
      continue;
    }
    LaurentA w = paired_power(h);
    if (h % 2 != 0) w = -w;
    acc = acc + gh.mul_monomial(w, h * h);
  }
  return acc;
}

std::pair<Series<ZElem>, Series<ZElem>> even_partial_tail(Exp r, Exp order) {
  if (r < 0) throw std::invalid_argument("tail index must be nonnegative");
  auto lhs = gamma_closed(2 * r, order - 4 * r * r).mul_monomial(kOne, 4 * r * r);
  auto rhs = Series<ZElem>::zero(order);
  for (Exp n = r; 6 * n * n + 4 * n - 2 * r * r < order; ++n) {
    ZElem sgn = int_sign(n + r);
    rhs = rhs + Series<ZElem>::monomial(sgn, 6 * n * n + 4 * n - 2 * r * r, order);
    rhs = rhs + Series<ZElem>::monomial(sgn, 6 * n * n + 8 * n + 2 - 2 * r * r, order);
  }
  return {lhs, rhs};
}

Series<ZElem> build_T(Exp order) {
  auto acc = Series<ZElem>::zero(order);
  auto term = Series<ZElem>::constant(kOne, order);
  for (Exp m = 0; 2 * m < order; ++m) {
    if (m > 0)
      term = term.mul_binomial(ZElem(-1), 4 * m - 2)
                 .mul_monomial(kOne, 2)
                 .truncated(order)
                 .div_binomial(ZElem(-1), 2 * m);
    acc = acc + term;
  }
  return acc;
}

Series<ZElem> build_U(Exp order) {
  auto acc = Series<ZElem>::zero(order);
  auto term = Series<ZElem>::constant(kOne, order);
  for (Exp m = 0; 2 * m < order; ++m) {
    if (m > 0)
      term = term.mul_binomial(ZElem(-1), 6 * m - 3)
                 .mul_monomial(kOne, 2)
                 .truncated(order)
                 .div_binomial(ZElem(-1), 2 * m - 1)
                 .div_binomial(ZElem(-1), 2 * m);
    acc = acc + term;
  }
  return acc;
}

Series<ZElem> build_V(Exp order) {
  auto acc = Series<ZElem>::zero(order);
  auto term = Series<ZElem>::constant(kOne, order);
  for (Exp m = 0; 2 * m < order; ++m) {
    if (m > 0)
      term = term.mul_binomial(kOne, 6 * m - 3)
                 .mul_monomial(kOne, 2)
                 .truncated(order)
                 .div_binomial(kOne, 2 * m - 1)
                 .div_binomial(ZElem(-1), 2 * m);
    acc = acc + term;
  }
  return acc;
}

long long cos_weight(long long r) {
  static const long long table[6] = {2, 1, -1, -2, -1, 1};
  return table[((r % 6) + 6) % 6];
}

namespace {

Series<ZElem> corollary_even_shape(Exp order,
                                   const std::function<long long(Exp)>& weight) {
  auto acc = Series<ZElem>::zero(order);
  for (Exp n = 0; 4 * n * n + 4 * n < order; ++n) {
    auto inner = Series<ZElem>::constant(kOne);
    for (Exp j = 1; j <= n; ++j)
      inner = inner + Series<ZElem>::monomial(ZElem(weight(j)), -2 * j * j);
    ZElem sgn = int_sign(n);
    auto pref = Series<ZElem>::monomial(sgn, 6 * n * n + 4 * n) +
                Series<ZElem>::monomial(sgn, 6 * n * n + 8 * n + 2);
    acc = acc + (pref * inner).truncated(order);
  }
  return acc;
}

Series<ZElem> corollary_odd_shape(Exp order,
                                  const std::function<long long(Exp)>& weight) {
  auto acc = Series<ZElem>::zero(order);
  for (Exp n = 0; 4 * n * n + 8 * n + 3 < order; ++n) {
    auto inner = Series<ZElem>::zero();
    for (Exp j = 0; j <= n; ++j)
      inner = inner + Series<ZElem>::monomial(ZElem(weight(j)), -2 * j * (j + 1));
    ZElem sgn = int_sign(n + 1);
    auto pref = Series<ZElem>::monomial(sgn, 6 * n * n + 10 * n + 3) +
                Series<ZElem>::monomial(sgn, 6 * n * n + 14 * n + 7);
    acc = acc + (pref * inner).truncated(order);
  }
  return acc;
}

}  // namespace

Series<ZElem> rhs_corollary(std::string_view name, Exp order) {
  if (name == "cor-even")
    return corollary_even_shape(order, [](Exp j) { return j % 2 == 0 ? 2 : -2; });
  if (name == "cor-i-companion")
    return corollary_even_shape(order, [](Exp) { return 2; });
  if (name == "cor-rho-even" || name == "cor-omega-even")
    return corollary_even_shape(order, [](Exp j) { return cos_weight(j); });
  if (name == "cor-odd")
    return corollary_odd_shape(order, [](Exp j) { return j % 2 == 0 ? 2 : -2; });
  if (name == "cor-rho-odd")
    return corollary_odd_shape(order, [](Exp j) { return cos_weight(j - 1); });
  if (name == "cor-omega-odd")
    return corollary_odd_shape(order, [](Exp j) { return cos_weight(j + 2); });
  throw std::invalid_argument("unknown corollary: " + std::string(name));
}

}  // namespace qhecke
