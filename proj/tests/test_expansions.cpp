#include "doctest.h"

#include <cmath>

#include "cusp/errors.hpp"
#include "cusp/expansions.hpp"

using namespace cusp;

namespace {

FqRat R(const FiniteField* F, const std::string& s) { return FqRat::parse(F, s); }

}  // namespace

TEST_CASE("Carlitz exponential and module coefficients") {
  for (std::uint64_t q : {2, 3, 4}) {
    const FiniteField* F = FiniteField::get(q);
    auto alpha = carlitz_exp(F, 4);
    // D_k = (T^(q^k) - T) D_{k-1}^q.
    FqRat D = FqRat::constant(F, 1);
    Poly T = Poly::var(F);
    Poly Tk = T;
    for (int k = 1; k <= 4; ++k) {
      Tk = Tk.frobenius();
      D = FqRat(Tk - T) * D.pow(static_cast<std::int64_t>(q));
      CHECK(alpha[static_cast<std::size_t>(k)] == D.inv());
    }
    DrinfeldCoeffs phi = carlitz_coeffs(T);
    CHECK(exp_from_module(phi, 4) == alpha);
    // phi_{T^2} = T^2 + (T + T^q) tau + tau^2.
    DrinfeldCoeffs phi2 = carlitz_coeffs(T * T);
    REQUIRE(phi2.l.size() == 3);
    CHECK(phi2.l[1] == FqRat(T + T.frobenius()));
    CHECK(exp_from_module(phi2, 4) == alpha);
  }
}

TEST_CASE("relations solver round trips") {
  for (std::uint64_t q : {2, 3}) {
    const FiniteField* F = FiniteField::get(q);
    Poly T = Poly::var(F);
    for (auto lT : {std::vector<FqRat>{R(F, "1"), R(F, "1")}, std::vector<FqRat>{R(F, "T"), R(F, "T+1")}}) {
      DrinfeldCoeffs phi = drinfeld_coeffs(T, lT);
      auto alpha = exp_from_module(phi, 4);
      CHECK(alpha[1] == lT[0] / (FqRat(T.frobenius()) - FqRat(T)));
      auto E = eisenstein_from_exp(alpha, 4);
      CHECK(exp_from_eisenstein(E, 4) == alpha);
      CHECK(module_from_exp(T, 2, alpha).l == phi.l);
      // A different base element defines the same exponential.
      DrinfeldCoeffs phi_b = drinfeld_coeffs(T * T + T + Poly::constant(F, 1), lT);
      CHECK(exp_from_module(phi_b, 4) == alpha);
    }
  }
}

TEST_CASE("Goss polynomials and gamma") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FiniteField* F = FiniteField::get(q);
    const int qi = static_cast<int>(q);
    auto alpha = carlitz_exp(F, 2);
    GossTable t = goss_polys(F, alpha, qi * qi + 2);
    for (int k = 1; k <= qi; ++k) {
      CHECK(t.gamma(k) == k);
      for (int j = 0; j < k; ++j) CHECK(t.G[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].is_zero());
      CHECK(t.G[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == FqRat::constant(F, 1));
    }
    CHECK(t.gamma(qi + 1) == 2);
    CHECK(t.G[static_cast<std::size_t>(qi + 1)][2] == alpha[1]);
    CHECK(goss_gamma(q, qi + 1) == 2);
    // Two rank-2 specializations give the same vanishing orders.
    Poly T = Poly::var(F);
    auto a1 = exp_from_module(drinfeld_coeffs(T, {R(F, "1"), R(F, "1")}), 2);
    auto a2 = exp_from_module(drinfeld_coeffs(T, {R(F, "T"), R(F, "T^2+1")}), 2);
    GossTable t1 = goss_polys(F, a1, qi * qi + 2), t2 = goss_polys(F, a2, qi * qi + 2);
    for (int k = 1; k <= qi * qi + 2; ++k) {
      CAPTURE(q);
      CAPTURE(k);
      CHECK(t1.gamma(k) == t2.gamma(k));
      CHECK(t1.gamma(k) == t.gamma(k));
      CHECK(t1.gamma(k) >= 1);
    }
  }
}

TEST_CASE("S polynomials") {
  for (std::uint64_t q : {2, 3, 4}) {
    const FiniteField* F = FiniteField::get(q);
    const std::int64_t qq = static_cast<std::int64_t>(q);
    CHECK(s_polynomial(Poly::constant(F, 1)).coeffs == std::map<std::int64_t, FqRat>{{0, FqRat::constant(F, 1)}});
    Poly T = Poly::var(F);
    CHECK(s_polynomial(T).coeffs == std::map<std::int64_t, FqRat>{{0, FqRat::constant(F, 1)}, {qq - 1, FqRat(T)}});
    for (auto m : {T * T + Poly::constant(F, 1), T * T * T + T}) {
      SPolynomial s = s_polynomial(m);
      CHECK(s.coeffs.at(0) == FqRat::constant(F, 1));
      for (auto& [e, c] : s.coeffs) {
        CHECK(e % (qq - 1) == 0);
        CHECK(c.is_poly());
      }
      CHECK(s.degree() == static_cast<std::int64_t>(std::pow(q, m.deg())) - 1);
    }
  }
  for (int r = 2; r <= 4; ++r)
    for (int dm = 0; dm <= 2; ++dm) {
      SymbolicS s = s_polynomial_symbolic(3, r, dm, "m");
      CHECK(s.coeffs.size() == static_cast<std::size_t>((r - 1) * dm + 1));
      for (auto& [e, c] : s.coeffs) {
        CHECK(e % 2 == 0);
        auto w = graded_weight_check(s.ring, c);
        REQUIRE(std::holds_alternative<std::int64_t>(w));
        CHECK(std::get<std::int64_t>(w) == -e);
      }
    }
}

TEST_CASE("t against t_n") {
  for (std::uint64_t q : {2, 3}) {
    const FiniteField* F = FiniteField::get(q);
    const std::int64_t qq = static_cast<std::int64_t>(q);
    Poly T = Poly::var(F);
    for (auto n : {T, T * T + T + Poly::constant(F, 1)}) {
      const std::int64_t qd = static_cast<std::int64_t>(std::pow(q, n.deg()));
      TSeries t = t_level_relation(n, 3 * qd);
      CHECK(t.val() == qd);
      CHECK(t.lead() == FqRat::constant(F, 1));
      CHECK(t.pow(qq - 1).val() == (qq - 1) * qd);
      // 1/t = phi_n(1/t_n): check phi_n(t_n^-1) * t = 1.
      DrinfeldCoeffs phi = carlitz_coeffs(n);
      TSeries s(FqRatDomain{F}, "t", kExactPrec);
      for (std::size_t i = 0; i < phi.l.size(); ++i)
        s += TSeries::monomial(FqRatDomain{F}, "t", phi.l[i], -static_cast<std::int64_t>(std::pow(q, i)));
      TSeries one = s * t;
      CHECK(one.val() == 0);
      for (std::int64_t e = 0; e < one.prec(); ++e) CHECK(one[e] == (e == 0 ? FqRat::constant(F, 1) : FqRat(F)));
    }
  }
}

TEST_CASE("discriminant by two routes") {
  for (std::uint64_t q : {2, 3}) {
    const FiniteField* F = FiniteField::get(q);
    const std::int64_t qq = static_cast<std::int64_t>(q), N = qq * qq * qq;
    TExpansion p = delta_product_series(q, N);
    TExpansion e = delta_via_eisenstein_series(q, N);
    CHECK(p.series.prec() == N + 1);
    CHECK(e.series.prec() == N + 1);
    CHECK(first_difference(p.series, e.series) == -1);
    CHECK(p.series.val() == qq - 1);
    CHECK(p.series.lead() == -FqRat::constant(F, 1));
    // g has constant term 1.
    EisensteinRoute er = eisenstein_route(q, N);
    CHECK(er.g[0] == FqRat::constant(F, 1));
    CHECK(er.g[qq - 1] == -(FqRat(Poly::var(F).frobenius()) - FqRat::T(F)));
  }
  // Dropping the exponent (q-1)(q^2-1) breaks the agreement.
  const FiniteField* F = FiniteField::get(2);
  TSeries bare = TSeries::monomial(FqRatDomain{F}, "t", -FqRat::constant(F, 1), 1, 9);
  for (int d = 1; d <= 3; ++d)
    for (std::uint64_t c = 1u << d; c < 2u << d; ++c) bare *= s_polynomial(Poly::decode(F, c)).series(F, 9);
  CHECK(first_difference(bare, delta_via_eisenstein_series(2, 8).series) != -1);
}

TEST_CASE("Bezout exponents for the canonical discriminant") {
  auto c = canonical_delta_exponents(2, 1, 2, 1, 2);
  CHECK(c.x == 1);
  CHECK(c.x2 == 0);
  CHECK(c.j == 3);
  auto c2 = canonical_delta_exponents(2, 1, 2, 2, 3);
  CHECK(c2.gcd == 3);
  CHECK(c2.i == 15);
  CHECK(c2.i2 == 63);
  CHECK(c2.shifted_pair);
  CHECK(-(c2.j + 1) * c2.i + c2.i2 == c2.j);
  CHECK_THROWS_AS(canonical_delta_exponents(2, 1, 2, 2, 4), ParameterError);
  for (std::uint64_t q : {2, 3, 4})
    for (int dinf = 1; dinf <= 3; ++dinf)
      for (int r = 2; r <= 3; ++r) {
        auto b = canonical_delta_exponents(q, dinf, r, dinf, 2 * dinf);
        CHECK(b.valid);
        CHECK(b.x * b.i + b.x2 * b.i2 == b.j);
      }
}
