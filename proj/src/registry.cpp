#include "qhecke/registry.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <stdexcept>

#include "qhecke/identities.hpp"

namespace qhecke {
namespace {

const ZElem kOne = ZElem::one();

template <CoeffRing R>
std::optional<Mismatch> window_compare(const Series<R>& lhs, const Series<R>& rhs,
                                       Exp order) {
  auto d = first_difference(lhs, rhs, order);
  if (!d) return std::nullopt;
  return Mismatch{*d, lhs.coeff(*d).str(), rhs.coeff(*d).str()};
}

template <CoeffRing R>
std::optional<Mismatch> exact_compare(const Series<R>& lhs, const Series<R>& rhs) {
  auto d = first_difference_exact(lhs, rhs);
  if (!d) return std::nullopt;
  return Mismatch{*d, lhs.coeff(*d).str(), rhs.coeff(*d).str()};
}

std::optional<Mismatch> run_thm_parity(Exp order, Exp residue) {
  auto p = build_P_a(order);
  auto rhs = residue == 0 ? rhs_even(order) : rhs_odd(order);
  return window_compare(p.sieve({2, residue}), rhs, order);
}

std::optional<Mismatch> run_cor_parity(Exp order, Exp residue) {
  auto p = build_P_at(kOne, order);
  auto rhs = rhs_corollary(residue == 0 ? "cor-even" : "cor-odd", order);
  return window_compare(p.sieve({2, residue}), rhs, order);
}

// The specialized companions are checked twice over: the one-variable build
// must agree with the specialization homomorphism applied to S_a, and the
// Euler-factor product must match the stated finite-theta sum.
template <CoeffRing R>
std::optional<Mismatch> dual_route(const Series<ZElem>& direct, Exp order) {
  return window_compare(embed<R>(direct), build_S_at(R::gen(), order), order);
}

std::optional<Mismatch> run_i_vanish(Exp order) {
  auto t = build_T(order);
  if (auto m = dual_route<GaussInt>(t, order)) return m;
  auto p = pochhammer_inf(kOne, 4, 4, order) * t;
  return window_compare(p.sieve({2, 1}), Series<ZElem>::zero(order), order);
}

std::optional<Mismatch> run_i_companion(Exp order) {
  auto t = build_T(order);
  if (auto m = dual_route<GaussInt>(t, order)) return m;
  auto p = pochhammer_inf(kOne, 4, 4, order) * t;
  return window_compare(p, rhs_corollary("cor-i-companion", order), order);
}

template <CoeffRing R>
std::optional<Mismatch> run_cyclotomic(Exp order, const Series<ZElem>& direct,
                                       std::string_view rhs_name, Exp residue) {
  if (auto m = dual_route<R>(direct, order)) return m;
  auto p = pochhammer_inf(kOne, 4, 4, order) * direct;
  return window_compare(p.sieve({2, residue}), rhs_corollary(rhs_name, order), order);
}

std::optional<Mismatch> run_pentagonal_closed(Exp max_n) {
  for (Exp n = 0; n <= max_n; ++n)
    if (auto m = exact_compare(pentagonal_poly_def(n), pentagonal_poly_closed(n)))
      return m;
  return std::nullopt;
}

std::optional<Mismatch> run_pentagonal_recurrence(Exp max_n) {
  std::vector<Series<ZElem>> defs;
  defs.reserve(static_cast<size_t>(max_n) + 1);
  for (Exp n = 0; n <= max_n; ++n) defs.push_back(pentagonal_poly_def(n));
  for (Exp n = 3; n <= max_n; ++n) {
    auto stepped = defs[static_cast<size_t>(n - 3)].mul_monomial(ZElem(-1), 2 - n);
    if (auto m = exact_compare(defs[static_cast<size_t>(n)], stepped)) return m;
  }
  return std::nullopt;
}

std::optional<Mismatch> run_tail_coeff(Exp order) {
  const Exp z_degree = 40;
  auto l = build_L(z_degree, order);
  for (Exp n = 0; n <= z_degree; ++n) {
    auto expected =
        pentagonal_poly_closed(n).mul_monomial(kOne, n * (n + 1) / 2).truncated(order);
    if (auto m = window_compare(l[static_cast<size_t>(n)], expected, order)) return m;
  }
  return std::nullopt;
}

std::optional<Mismatch> run_macmahon(Exp max_len) {
  for (Exp m = 0; m <= max_len; ++m)
    for (Exp n = 0; n <= max_len; ++n)
      if (auto mm = exact_compare(macmahon_lhs(m, n), macmahon_rhs(m, n))) return mm;
  return std::nullopt;
}

std::optional<Mismatch> run_finite_jacobi(Exp max_len) {
  for (Exp n = 0; n <= max_len; ++n)
    if (auto m = exact_compare(finite_jacobi_product(n), finite_jacobi_sum(n)))
      return m;
  return std::nullopt;
}

// The pair relation with denominators cleared: multiplying the beta sum
// through by (q^2;q^2)_{2N} turns every summand into a q^2-binomial, so the
// whole check is an exact polynomial comparison.
std::optional<Mismatch> run_bailey_pair(Exp max_len) {
  for (Exp n = 0; n <= max_len; ++n) {
    auto rhs = Series<LaurentA>::zero();
    for (Exp r = 0; r <= n; ++r)
      rhs = rhs + alpha(r) * embed<LaurentA>(qbinom(2 * n, n + r, 2));
    if (auto m = exact_compare(finite_jacobi_product(n), rhs)) return m;
  }
  return std::nullopt;
}

std::optional<Mismatch> run_gamma(Exp order) {
  for (Exp r = 0; r <= 15; ++r)
    if (auto m = window_compare(gamma_tail(r, order), gamma_closed(r, order), order))
      return m;
  return std::nullopt;
}

std::optional<Mismatch> run_er_tail(Exp order) {
  for (Exp r = 0; r <= 6; ++r) {
    auto [lhs, rhs] = even_partial_tail(r, order);
    if (auto m = window_compare(lhs, rhs, order)) return m;
  }
  return std::nullopt;
}

std::vector<Identity> make_registry() {
  std::vector<Identity> out;
  auto add = [&out](std::string name, std::string ring, std::string description,
                    Exp default_order, Exp order_cap,
                    std::function<std::optional<Mismatch>(Exp)> run) {
    out.push_back({std::move(name), std::move(ring), std::move(description),
                   default_order, order_cap, std::move(run)});
  };

  add("thm1.1-even", "laurent_a",
      "even q-powers of the two-variable product match the finite-theta double sum",
      200, 0, [](Exp o) { return run_thm_parity(o, 0); });
  add("thm1.1-odd", "laurent_a",
      "odd q-powers of the two-variable product match the finite-theta double sum",
      200, 0, [](Exp o) { return run_thm_parity(o, 1); });
  add("cor-even", "integers", "a=1 specialization of the even identity", 300, 0,
      [](Exp o) { return run_cor_parity(o, 0); });
  add("cor-odd", "integers", "a=1 specialization of the odd identity", 300, 0,
      [](Exp o) { return run_cor_parity(o, 1); });
  add("cor-residue-1", "integers",
      "coefficients at exponents 1 mod 4 of the a=1 product vanish", 400, 0,
      [](Exp o) {
        auto p = build_P_at(kOne, o);
        return window_compare(p.sieve({4, 1}), Series<ZElem>::zero(o), o);
      });
  add("cor-residue-3", "integers",
      "the 3 mod 4 sieve of the a=1 product carries its whole odd part", 400, 0,
      [](Exp o) {
        auto p = build_P_at(kOne, o);
        return window_compare(p.sieve({4, 3}), p.sieve({2, 1}), o);
      });
  add("cor-i-vanish", "gauss", "odd part of the a=i companion vanishes", 300, 0,
      run_i_vanish);
  add("cor-i-companion", "gauss",
      "a=i companion equals its unsigned finite-theta sum", 200, 0, run_i_companion);
  add("cor-rho-even", "prim6",
      "even part of the sixth-root companion, built directly and by specialization",
      150, 0, [](Exp o) {
        return run_cyclotomic<Prim6Int>(o, build_U(o), "cor-rho-even", 0);
      });
  add("cor-rho-odd", "prim6",
      "odd part of the sixth-root companion, built directly and by specialization",
      150, 0, [](Exp o) {
        return run_cyclotomic<Prim6Int>(o, build_U(o), "cor-rho-odd", 1);
      });
  add("cor-omega-even", "prim3",
      "even part of the cube-root companion, built directly and by specialization",
      150, 0, [](Exp o) {
        return run_cyclotomic<Prim3Int>(o, build_V(o), "cor-omega-even", 0);
      });
  add("cor-omega-odd", "prim3",
      "odd part of the cube-root companion, built directly and by specialization",
      150, 0, [](Exp o) {
        return run_cyclotomic<Prim3Int>(o, build_V(o), "cor-omega-odd", 1);
      });
  add("lemma-pentagonal-closed", "integers",
      "alternating q-binomial sum collapses to a pentagonal monomial for indices up "
      "to the order",
      150, 200, run_pentagonal_closed);
  add("lemma-pentagonal-recurrence", "integers",
      "three-step recurrence of the pentagonal polynomial for indices up to the order",
      150, 200, run_pentagonal_recurrence);
  add("lemma-tail-coeff", "integers",
      "z-coefficients 0..40 of the tail generating function are shifted pentagonal "
      "monomials",
      200, 0, run_tail_coeff);
  add("eq-macmahon", "laurent_a",
      "two-variable finite product equals its signed binomial expansion for lengths "
      "up to the order",
      8, 12, run_macmahon);
  add("eq-finite-jacobi-a", "laurent_a",
      "finite Jacobi product equals its signed h-sum for lengths up to the order", 12,
      20, run_finite_jacobi);
  add("eq-bailey-pair", "laurent_a",
      "Bailey pair relation in cleared-denominator form for lengths up to the order",
      12, 20, run_bailey_pair);
  add("eq-gamma", "integers",
      "tail sum defining gamma equals its closed form for indices up to 15", 200, 0,
      run_gamma);
  add("eq-master", "laurent_a", "the transformed h-sum rebuilds the two-variable product",
      200, 0, [](Exp o) { return window_compare(master_sum(o), build_P_a(o), o); });
  add("eq-er-tail", "integers",
      "partial tails of even-indexed gamma evaluate to their theta form for r up to 6",
      150, 0, run_er_tail);
  return out;
}

}  // namespace

const std::vector<Identity>& registry() {
  static const std::vector<Identity> entries = make_registry();
  return entries;
}

const Identity* find_identity(std::string_view name) {
  for (const auto& id : registry())
    if (id.name == name) return &id;
  return nullptr;
}

VerifyReport run_identity(const std::string& name, Exp order) {
  const Identity* id = find_identity(name);
  if (id == nullptr) throw std::invalid_argument("unknown identity: " + name);
  if (order <= 0) throw std::invalid_argument("order must be positive");

  VerifyReport r;
  r.identity = id->name;
  r.ring = id->ring;
  r.order = id->order_cap > 0 ? std::min(order, id->order_cap) : order;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (auto m = id->run(r.order)) {
      r.status = VerifyStatus::kMismatch;
      r.first_mismatch = std::move(m);
    } else {
      r.status = VerifyStatus::kMatch;
    }
  } catch (const std::exception& e) {
    r.status = VerifyStatus::kError;
    r.error = e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

namespace {

Series<ZElem> named_series(const std::string& name, Exp order) {
  if (name == "S") return build_S_at(kOne, order);
  if (name == "P1") return build_P_at(kOne, order);
  if (name == "T") return build_T(order);
  if (name == "U") return build_U(order);
  if (name == "V") return build_V(order);
  constexpr std::string_view kGamma = "gamma:";
  if (name.size() > kGamma.size() && name.compare(0, kGamma.size(), kGamma) == 0) {
    Exp r = 0;
    const char* first = name.data() + kGamma.size();
    const char* last = name.data() + name.size();
    auto [p, ec] = std::from_chars(first, last, r);
    if (ec != std::errc() || p != last || r < 0)
      throw std::invalid_argument("bad gamma index in series name: " + name);
    return gamma_closed(r, order);
  }
  throw std::invalid_argument("unknown series: " + name);
}

}  // namespace

Table series_table(const std::string& name, std::optional<Exp> order,
                   std::optional<Exp> count) {
  if (order.has_value() == count.has_value())
    throw std::invalid_argument("exactly one of order and count must be given");
  Exp rows = 0;
  if (order) {
    if (*order < 0) throw std::invalid_argument("order must be nonnegative");
    rows = *order + 1;
  } else {
    if (*count <= 0) throw std::invalid_argument("count must be positive");
    rows = *count;
  }

  Table t;
  if (name == "DN") {
    t.index_key = "n";
    t.value_key = "value";
    for (Exp n = 0; n < rows; ++n)
      t.rows.push_back({n, to_poly_string(pentagonal_poly_def(n))});
    return t;
  }
  t.index_key = "exponent";
  t.value_key = "coefficient";
  auto f = named_series(name, rows);
  for (Exp e = 0; e < rows; ++e) t.rows.push_back({e, f.coeff(e).str()});
  return t;
}

}  // namespace qhecke
