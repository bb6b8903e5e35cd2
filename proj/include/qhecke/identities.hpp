#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "qhecke/series.hpp"

namespace qhecke {

// S_a(q) = sum_{m>=0} (aq;q^2)_m (q/a;q^2)_m q^{2m} / (-q^2;q^2)_m at any
// unit value of a, summed by incremental term ratios while 2m < order.
template <CoeffRing R>
Series<R> build_S_at(const R& a, Exp order) {
  auto ainv = a.try_invert();
  if (!ainv) throw std::domain_error("building S_a requires a unit value for a");
  const R one = R::one();
  auto acc = Series<R>::zero(order);
  auto term = Series<R>::constant(one, order);
  for (Exp m = 0; 2 * m < order; ++m) {
    if (m > 0)
      term = term.mul_binomial(a, 2 * m - 1)
                 .mul_binomial(*ainv, 2 * m - 1)
                 .mul_monomial(one, 2)
                 .truncated(order)
                 .div_binomial(-one, 2 * m);
    acc = acc + term;
  }
  return acc;
}

// P_a(q) = (q^4;q^4)_inf S_a(q).
template <CoeffRing R>
Series<R> build_P_at(const R& a, Exp order) {
  return pochhammer_inf(R::one(), 4, 4, order) * build_S_at(a, order);
}

Series<LaurentA> build_S_a(Exp order);
Series<LaurentA> build_P_a(Exp order);

// The two parity halves of the Hecke-type double sum: even part carries
// weights (-1)^j a^{2j} q^{-2j^2}, odd part (-1)^j (a^{2j+1}+a^{-2j-1})
// q^{-2j(j+1)} under prefactors with exponents 6n^2+4n resp. 6n^2+10n+3.
Series<LaurentA> rhs_even(Exp order);
Series<LaurentA> rhs_odd(Exp order);

// D_N as the alternating q-binomial sum, and its three-case closed form.
Series<ZElem> pentagonal_poly_def(Exp N);
Series<ZElem> pentagonal_poly_closed(Exp N);

// Coefficients [z^0]L .. [z^z_degree]L of the tail generating function
// L(z) = (q;q)_inf sum_k q^k (z^2 q^{k+1};q)_k (-z q^{k+1};q)_inf / (q;q)_k,
// expanded through the (j, ell) double sum with k = j + ell.
std::vector<Series<ZElem>> build_L(Exp z_degree, Exp q_order);

// (zq;q)_M (z^{-1};q)_N and its expansion as a z-Laurent sum of q-binomials,
// with z housed by the Laurent coefficient ring.
Series<LaurentA> macmahon_lhs(Exp M, Exp N);
Series<LaurentA> macmahon_rhs(Exp M, Exp N);

// (aq;q^2)_N (q/a;q^2)_N and the matching signed h-sum of q^2-binomials.
Series<LaurentA> finite_jacobi_product(Exp N);
Series<LaurentA> finite_jacobi_sum(Exp N);

// The Bailey pair in base q^2 and the conjugate pair built from delta.
Series<LaurentA> alpha(Exp R);
Series<LaurentA> beta(Exp N, Exp order);
Series<ZElem> delta(Exp N, Exp order);
Series<ZElem> gamma_tail(Exp R, Exp order);
Series<ZElem> gamma_closed(Exp R, Exp order);

// P_a as the transformed sum over h of (-1)^h a^h q^{h^2} gamma_{|h|}, in
// whole or restricted to one parity of h.
Series<LaurentA> master_sum(Exp order);
Series<LaurentA> master_sum_parity(Exp order, int parity);

// Both sides of the partial-tail evaluation of q^{4r^2} gamma_{2r}.
std::pair<Series<ZElem>, Series<ZElem>> even_partial_tail(Exp r, Exp order);

// The three one-variable companions of S_a at a = i, rho, omega.
Series<ZElem> build_T(Exp order);
Series<ZElem> build_U(Exp order);
Series<ZElem> build_V(Exp order);

// 2 cos(pi r / 3), the 6-periodic weight table of the cyclotomic companions.
long long cos_weight(long long r);

// Finite-theta right side of a named corollary identity, over the integers.
Series<ZElem> rhs_corollary(std::string_view name, Exp order);

}  // namespace qhecke
