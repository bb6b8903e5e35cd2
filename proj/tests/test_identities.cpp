#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qhecke/bailey.hpp"
#include "qhecke/identities.hpp"

using namespace qhecke;

namespace {

const ZElem kOne = ZElem::one();

void check_prefix(const Series<ZElem>& f, const std::vector<long long>& want) {
  for (size_t n = 0; n < want.size(); ++n) {
    CAPTURE(n);
    CHECK(f.coeff(static_cast<Exp>(n)) == ZElem(want[n]));
  }
}

Series<ZElem> specialize_one(const Series<LaurentA>& f) {
  return f.map<ZElem>([](const LaurentA& c) { return specialize_a(c, kOne); });
}

template <CoeffRing R>
Series<R> specialize_gen(const Series<LaurentA>& f) {
  return f.map<R>([](const LaurentA& c) { return specialize_a(c, R::gen()); });
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("S at a=1 matches its frozen expansion") {
  auto s = build_S_at(kOne, 30);
  check_prefix(s, {1, 0, 1, -2, 1,  0, 1, -4, 4,  0, 1, -6, 5,  0, 4,
                   -12, 8, 0, 5, -16, 12, 0, 8, -28, 21, 0, 12, -38, 28, 0});
}

TEST_CASE("P at a=1 matches its frozen expansion") {
  auto p = build_P_at(kOne, 31);
  check_prefix(p, {1, 0, 1, -2, 0, 0, 0, -2, 2,  0, -1, 0, 0, 0, 2, -2,
                   -1, 0, 0, 2, 0, 0, 0, -2, 2, 0, 0, 2, 0, 0, -2});
}

TEST_CASE("S over the Laurent ring has the expected low coefficients") {
  auto s = build_S_a(9);
  CHECK(s.coeff(0) == LaurentA::one());
  CHECK(s.coeff(1) == LaurentA());
  CHECK(s.coeff(2) == LaurentA::one());
  CHECK(s.coeff(3) == LaurentA::parse("-a^-1 - a^1"));
  CHECK(s.coeff(4) == LaurentA::one());
  CHECK(s.coeff(5) == LaurentA());
  CHECK(s.coeff(6) == LaurentA::one());
  CHECK(s.coeff(7) == LaurentA::parse("-2*a^-1 - 2*a^1"));
  CHECK(s.coeff(8) == LaurentA::parse("a^-2 + 2 + a^2"));
}

TEST_CASE("S over the Laurent ring agrees with the direct pochhammer sum") {
  const Exp order = 40;
  const LaurentA one = LaurentA::one();
  auto naive = Series<LaurentA>::zero(order);
  for (Exp m = 0; 2 * m < order; ++m) {
    auto num = pochhammer(LaurentA::gen(), 1, 2, m) *
               pochhammer(LaurentA::monomial(BigInt(1), -1), 1, 2, m);
    auto den = pochhammer(-one, 2, 2, m);
    auto term = num.truncated(order) * den.invert_to(order);
    naive = naive + term.mul_monomial(one, 2 * m).truncated(order);
  }
  CHECK(naive == build_S_a(order));
}

TEST_CASE("rejects a non-unit specialization point") {
  CHECK_THROWS_AS(build_S_at(LaurentA::parse("1 + a^1"), 10), std::domain_error);
}

TEST_CASE("T U V match their frozen expansions") {
  check_prefix(build_T(21), {1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1,
                             0, 1, 0, 0, 0, 0, 0, 1, 0, 0});
  check_prefix(build_U(21), {1, 0, 1, -1, 1, 0, 1, -2, 1, 0, 1,
                             -3, 2, 0, 1, -3, 2, 0, 2, -5, 3});
  check_prefix(build_V(21), {1, 0, 1, 1, 1, 0, 1, 2, 1, 0, 1,
                             3, 2, 0, 1, 3, 2, 0, 2, 5, 3});
}

TEST_CASE("T U V are the cyclotomic specializations of S") {
  const Exp order = 60;
  auto s = build_S_a(order);
  CHECK(specialize_gen<GaussInt>(s) == embed<GaussInt>(build_T(order)));
  CHECK(specialize_gen<Prim6Int>(s) == embed<Prim6Int>(build_U(order)));
  CHECK(specialize_gen<Prim3Int>(s) == embed<Prim3Int>(build_V(order)));
}

TEST_CASE("Euler-factor products of T U V match their frozen expansions") {
  const Exp order = 21;
  auto e4 = pochhammer_inf(kOne, 4, 4, order);
  check_prefix(e4 * build_T(order), {1, 0, 1, 0, 0, 0, 0, 0, -2, 0, -1,
                                     0, 0, 0, -2, 0, -1, 0, 0, 0, 0});
  check_prefix(e4 * build_U(order), {1, 0, 1, -1, 0, 0, 0, -1, -1, 0, -1,
                                     0, 0, 0, -1, 2, -1, 0, 0, 1, 0});
  check_prefix(e4 * build_V(order), {1, 0, 1, 1, 0, 0, 0, 1, -1, 0, -1,
                                     0, 0, 0, -1, -2, -1, 0, 0, -1, 0});
}

TEST_CASE("gamma closed form matches its frozen expansions") {
  const Exp order = 41;
  std::vector<long long> g0(order, 0), g1(order, 0), g2(order, 0), g3(order, 0);
  g0[0] = 1; g0[2] = 1; g0[10] = -1; g0[16] = -1; g0[32] = 1;
  g1[2] = 1; g1[6] = 1; g1[18] = -1; g1[26] = -1;
  g2[4] = 1; g2[10] = 1; g2[26] = -1; g2[36] = -1;
  g3[6] = 1; g3[14] = 1; g3[34] = -1;
  check_prefix(gamma_closed(0, order), g0);
  check_prefix(gamma_closed(1, order), g1);
  check_prefix(gamma_closed(2, order), g2);
  check_prefix(gamma_closed(3, order), g3);
}

TEST_CASE("gamma tail sum equals the closed form") {
  for (Exp r = 0; r <= 6; ++r) {
    CAPTURE(r);
    CHECK(gamma_tail(r, 60) == gamma_closed(r, 60));
  }
}

TEST_CASE("delta examples") {
  CHECK(delta(0, 13) == pochhammer_inf(kOne, 4, 4, 13));
  auto e4 = pochhammer_inf(kOne, 4, 4, 20);
  auto expected =
      e4.mul_binomial(kOne, 2).mul_binomial(kOne, 2).mul_monomial(kOne, 2);
  CHECK(delta(1, 20) == expected.truncated(20));
  CHECK(delta(2, 20).min_exp() == 4);
}

TEST_CASE("alpha examples") {
  CHECK(alpha(0) == Series<LaurentA>::constant(LaurentA::one()));
  CHECK(alpha(1) == Series<LaurentA>::monomial(LaurentA::parse("-a^-1 - a^1"), 1));
  CHECK(alpha(2) == Series<LaurentA>::monomial(LaurentA::parse("a^-2 + a^2"), 4));
  CHECK(specialize_one(alpha(2)) == Series<ZElem>::monomial(ZElem(2), 4));
}

TEST_CASE("beta recovers the finite product when multiplied back") {
  const Exp order = 40;
  for (Exp n = 0; n <= 4; ++n) {
    CAPTURE(n);
    auto back = beta(n, order) * pochhammer(LaurentA::one(), 2, 2, 2 * n);
    CHECK(back.truncated(order) == finite_jacobi_product(n).truncated(order));
  }
}

TEST_CASE("the Bailey pair satisfies its defining relation") {
  BaileyPair<LaurentA> bp{2, [](Exp r) { return alpha(r); },
                          [](Exp n, Exp order) { return beta(n, order); }};
  for (Exp n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(bailey_relation_diff(bp, n, 40).window_is_zero());
  }
}

TEST_CASE("the conjugate pair satisfies its defining relation") {
  ConjugatePair<ZElem> cp{2, [](Exp n, Exp order) { return delta(n, order); },
                          [](Exp r, Exp order) { return gamma_closed(r, order); }};
  for (Exp r = 0; r <= 3; ++r) {
    CAPTURE(r);
    CHECK(conjugate_relation_diff(cp, r, 60).window_is_zero());
  }
}

TEST_CASE("the Bailey transform reproduces the master identity") {
  BaileyPair<LaurentA> bp{2, [](Exp r) { return alpha(r); },
                          [](Exp n, Exp order) { return beta(n, order); }};
  ConjugatePair<LaurentA> cp{
      2, [](Exp n, Exp order) { return embed<LaurentA>(delta(n, order)); },
      [](Exp r, Exp order) { return embed<LaurentA>(gamma_closed(r, order)); }};
  CHECK(bailey_transform_diff(bp, cp, 50).window_is_zero());
}

TEST_CASE("the master sum equals P over the Laurent ring") {
  const Exp order = 60;
  CHECK(master_sum(order) == build_P_a(order));
}

TEST_CASE("parity-restricted master sums are the parity sieves") {
  const Exp order = 60;
  auto full = master_sum(order);
  CHECK(master_sum_parity(order, 0) == full.sieve({2, 0}));
  CHECK(master_sum_parity(order, 1) == full.sieve({2, 1}));
  CHECK_THROWS_AS(master_sum_parity(order, 2), std::invalid_argument);
}

TEST_CASE("partial tails of even gamma evaluate to the stated theta sum") {
  for (Exp r : {0LL, 1LL, 3LL}) {
    CAPTURE(r);
    auto [lhs, rhs] = even_partial_tail(r, 80);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("parity halves start with the expected terms") {
  auto even = rhs_even(12);
  CHECK(even.coeff(0) == LaurentA::one());
  CHECK(even.coeff(2) == LaurentA::one());
  CHECK(even.coeff(8) == LaurentA::parse("a^-2 + a^2"));
  auto odd = rhs_odd(12);
  CHECK(odd.coeff(3) == LaurentA::parse("-a^-1 - a^1"));
  CHECK(odd.coeff(7) == LaurentA::parse("-a^-1 - a^1"));
  CHECK(odd.coeff(4) == LaurentA());
}

TEST_CASE("both parity halves match the sieved product") {
  const Exp order = 80;
  auto p = build_P_a(order);
  CHECK(rhs_even(order) == p.sieve({2, 0}));
  CHECK(rhs_odd(order) == p.sieve({2, 1}));
}

TEST_CASE("corollary sums match the specialized sieves") {
  const Exp order = 60;
  auto p1 = build_P_at(kOne, order);
  CHECK(rhs_corollary("cor-even", order) == p1.sieve({2, 0}));
  CHECK(rhs_corollary("cor-odd", order) == p1.sieve({2, 1}));

  auto e4 = pochhammer_inf(kOne, 4, 4, order);
  auto pt = e4 * build_T(order);
  CHECK(pt.sieve({2, 1}).window_is_zero());
  CHECK(rhs_corollary("cor-i-companion", order) == pt);

  auto pu = e4 * build_U(order);
  CHECK(rhs_corollary("cor-rho-even", order) == pu.sieve({2, 0}));
  CHECK(rhs_corollary("cor-rho-odd", order) == pu.sieve({2, 1}));

  auto pv = e4 * build_V(order);
  CHECK(rhs_corollary("cor-omega-even", order) == pv.sieve({2, 0}));
  CHECK(rhs_corollary("cor-omega-odd", order) == pv.sieve({2, 1}));

  CHECK_THROWS_AS(rhs_corollary("cor-nonsense", order), std::invalid_argument);
}

TEST_CASE("residues of P at a=1 vanish and coincide as stated") {
  auto p1 = build_P_at(kOne, 60);
  CHECK(p1.sieve({4, 1}).window_is_zero());
  CHECK(p1.sieve({4, 3}) == p1.sieve({2, 1}));
}

TEST_CASE("cosine weights are 6-periodic") {
  CHECK(cos_weight(0) == 2);
  CHECK(cos_weight(1) == 1);
  CHECK(cos_weight(2) == -1);
  CHECK(cos_weight(3) == -2);
  CHECK(cos_weight(4) == -1);
  CHECK(cos_weight(5) == 1);
  CHECK(cos_weight(6) == 2);
  CHECK(cos_weight(-1) == 1);
  CHECK(cos_weight(-2) == -1);
}

TEST_CASE("a perturbed parity sum is caught at the first wrong exponent") {
  const Exp order = 40;
  auto pref = Series<ZElem>::monomial(ZElem(-1), 10) +
              Series<ZElem>::monomial(ZElem(-1), 16);
  auto inner = Series<ZElem>::constant(kOne) + Series<ZElem>::monomial(ZElem(-2), -2);
  auto perturbed = rhs_corollary("cor-even", order) - (pref * inner).scale(ZElem(2));
  auto expected = build_P_at(kOne, order).sieve({2, 0});
  auto diff = first_difference(perturbed, expected, order);
  REQUIRE(diff.has_value());
  CHECK(*diff == 8);
}

TEST_CASE("pentagonal polynomial has the frozen small values") {
  const std::vector<std::pair<Exp, long long>> frozen = {
      {0, 1}, {0, 1}, {0, 0}, {-1, -1}, {-2, -1}, {0, 0}, {-5, 1},
      {-7, 1}, {0, 0}, {-12, -1}, {-15, -1}, {0, 0}, {-22, 1}};
  for (size_t n = 0; n < frozen.size(); ++n) {
    CAPTURE(n);
    auto d = pentagonal_poly_def(static_cast<Exp>(n));
    if (frozen[n].second == 0) {
      CHECK(d.window_is_zero());
    } else {
      CHECK(d == Series<ZElem>::monomial(ZElem(frozen[n].second), frozen[n].first));
    }
  }
  CHECK_THROWS_AS(pentagonal_poly_def(-1), std::invalid_argument);
}

TEST_CASE("pentagonal definition equals the closed form") {
  for (Exp n = 0; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(pentagonal_poly_def(n) == pentagonal_poly_closed(n));
  }
}

TEST_CASE("pentagonal recurrence steps down by three") {
  for (Exp n = 3; n <= 24; ++n) {
    CAPTURE(n);
    auto lhs = pentagonal_poly_def(n);
    auto rhs = pentagonal_poly_def(n - 3).mul_monomial(ZElem(-1), 2 - n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tail generating function has the frozen z-coefficients") {
  auto l = build_L(6, 30);
  CHECK(l[0] == Series<ZElem>::monomial(kOne, 0, 30));
  CHECK(l[1] == Series<ZElem>::monomial(kOne, 1, 30));
  CHECK(l[2].window_is_zero());
  CHECK(l[3] == Series<ZElem>::monomial(ZElem(-1), 5, 30));
  CHECK(l[4] == Series<ZElem>::monomial(ZElem(-1), 8, 30));
  CHECK(l[5].window_is_zero());
  CHECK(l[6] == Series<ZElem>::monomial(kOne, 16, 30));
}

TEST_CASE("tail z-coefficients are shifted pentagonal monomials") {
  const Exp order = 40;
  auto l = build_L(12, order);
  for (Exp n = 0; n <= 12; ++n) {
    CAPTURE(n);
    auto expected = pentagonal_poly_closed(n)
                        .mul_monomial(kOne, n * (n + 1) / 2)
                        .truncated(order);
    CHECK(l[static_cast<size_t>(n)] == expected);
  }
}

TEST_CASE("the two-variable binomial expansion holds at small lengths") {
  const std::vector<std::pair<Exp, Exp>> sizes = {
      {0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 2}, {4, 4}};
  for (auto [m, n] : sizes) {
    CAPTURE(m);
    CAPTURE(n);
    CHECK(macmahon_lhs(m, n) == macmahon_rhs(m, n));
  }
  auto f = macmahon_lhs(1, 1);
  CHECK(f.coeff(0) == LaurentA::parse("-a^-1 + 1"));
  CHECK(f.coeff(1) == LaurentA::parse("1 - a^1"));
}

TEST_CASE("the checked-in S expansion round-trips through JSON") {
  std::ifstream in(std::string(QHECKE_GOLDEN_DIR) + "/s_table.json");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  auto golden = series_from_json<ZElem>(nlohmann::json::parse(text));
  CHECK(golden == build_S_at(kOne, 30));
  CHECK(series_to_json(golden).dump() == text);
}

TEST_CASE("the finite Jacobi expansion holds at small lengths") {
  for (Exp n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(finite_jacobi_product(n) == finite_jacobi_sum(n));
  }
  auto f = finite_jacobi_product(1);
  CHECK(f.coeff(0) == LaurentA::one());
  CHECK(f.coeff(1) == LaurentA::parse("-a^-1 - a^1"));
  CHECK(f.coeff(2) == LaurentA::one());
  auto at_one = specialize_one(finite_jacobi_product(2));
  auto sq = pochhammer(kOne, 1, 2, 2);
  CHECK(at_one == sq * sq);
}

}  // TEST_SUITE
