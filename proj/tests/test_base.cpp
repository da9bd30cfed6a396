#include "doctest.h"

#include <set>

#include "cusp/errors.hpp"
#include "cusp/field.hpp"
#include "cusp/linalg.hpp"
#include "cusp/poly.hpp"
#include "cusp/rational.hpp"
#include "cusp/series.hpp"

using namespace cusp;

TEST_CASE("finite field axioms hold exhaustively for small q") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    const FiniteField* F = FiniteField::get(q);
    REQUIRE(F->size() == q);
    for (fe a = 0; a < q; ++a) {
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a) {
        CHECK(F->mul(a, F->inv(a)) == 1);
        CHECK(F->pow(a, static_cast<std::int64_t>(q - 1)) == 1);
      }
      for (fe b = 0; b < q; ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (fe c = 0; c < q; c += (q > 8 ? 3 : 1)) {
          CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
          CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("canonical modulus is the least irreducible and non prime powers are rejected") {
  const FiniteField* F4 = FiniteField::get(4);
  CHECK(F4->modulus() == std::vector<fe>{1, 1, 1});
  const FiniteField* F8 = FiniteField::get(8);
  CHECK(F8->modulus() == std::vector<fe>{1, 1, 0, 1});
  CHECK_THROWS_AS(FiniteField::get(6), ParameterError);
  CHECK_THROWS_AS(FiniteField::get(1), ParameterError);
}

TEST_CASE("prime subfield embeds by index in a tower") {
  const FiniteField* F2 = FiniteField::get(2);
  const FiniteField* F4 = FiniteField::get(4);
  const FiniteField* F16 = FiniteField::extension(F4, {F4->generator(), 1, 1});
  for (fe a = 0; a < 4; ++a)
    for (fe b = 0; b < 4; ++b) {
      CHECK(F16->add(a, b) == F4->add(a, b));
      CHECK(F16->mul(a, b) == F4->mul(a, b));
    }
  for (fe a = 0; a < 2; ++a) CHECK(F4->mul(a, a) == F2->mul(a, a));
}

TEST_CASE("irreducible polynomial enumeration") {
  const FiniteField* F2 = FiniteField::get(2);
  auto d1 = irreducible_polys(F2, 1);
  REQUIRE(d1.size() == 2);
  CHECK(d1[0].str() == "T");
  CHECK(d1[1].str() == "T+1");
  auto d2 = irreducible_polys(F2, 2);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].str() == "T^2+T+1");
  const FiniteField* F3 = FiniteField::get(3);
  auto q3 = irreducible_polys(F3, 2);
  CHECK(q3.size() == 3);
  // Oracle: no root and not a product of two linears.
  for (auto& f : q3)
    for (fe x = 0; x < 3; ++x) CHECK(f.eval(x) != 0);
  for (std::uint64_t q : {2, 3, 4, 5})
    for (int d = 1; d <= 5; ++d)
      CHECK(irreducible_polys(FiniteField::get(q), d).size() == irreducible_count(q, d));
  CHECK(integer_mobius(1) == 1);
  CHECK(integer_mobius(6) == 1);
  CHECK(integer_mobius(12) == 0);
  CHECK(integer_mobius(30) == -1);
}

TEST_CASE("factorization recovers products") {
  for (std::uint64_t q : {2, 3, 4, 9}) {
    const FiniteField* F = FiniteField::get(q);
    auto i1 = irreducible_polys(F, 1), i2 = irreducible_polys(F, 2), i3 = irreducible_polys(F, 3);
    Poly f = i1[0].pow(3) * i2.back() * i3[0] * i3.back().pow(2);
    auto fac = factor(f.scale(F->generator()));
    std::vector<std::pair<Poly, int>> expect = {{i1[0], 3}, {i2.back(), 1}, {i3[0], 1}, {i3.back(), 2}};
    std::sort(expect.begin(), expect.end(), [](auto& a, auto& b) { return a.first < b.first; });
    REQUIRE(fac.size() == expect.size());
    for (std::size_t i = 0; i < fac.size(); ++i) {
      CHECK(fac[i].first == expect[i].first);
      CHECK(fac[i].second == expect[i].second);
    }
  }
}

TEST_CASE("poly division, gcd and parsing") {
  const FiniteField* F = FiniteField::get(5);
  Poly a = Poly::parse(F, "T^3+2*T+1"), b = Poly::parse(F, "T^2+4");
  auto [qq, r] = a.divmod(b);
  CHECK(qq * b + r == a);
  CHECK(r.deg() < b.deg());
  auto x = xgcd(a * b, b * Poly::parse(F, "T+3"));
  CHECK(x.g == b.monic());
  CHECK(x.s * (a * b) + x.t * (b * Poly::parse(F, "T+3")) == x.g);
  CHECK(Poly::parse(F, x.g.str()) == x.g);
  CHECK_THROWS_AS(Poly::parse(F, "T^^2"), ParameterError);
  for (auto& f : irreducible_polys(F, 2)) CHECK(Poly::decode(F, f.encode()) == f);
}

TEST_CASE("linear algebra over F_q") {
  const FiniteField* F = FiniteField::get(3);
  FqMat m = {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}};
  CHECK(rank(F, m, 3) == 2);
  auto ns = nullspace(F, m, 3);
  REQUIRE(ns.size() == 1);
  for (auto& row : m) {
    fe s = 0;
    for (int j = 0; j < 3; ++j) s = F->add(s, F->mul(row[j], ns[0][j]));
    CHECK(s == 0);
  }
  CHECK(in_span(F, m, {1, 2, 1}));
  CHECK(!in_span(F, m, {1, 0, 0}));
}

TEST_CASE("rational function normalization") {
  QPoly S = QPoly::monomial(1, 1), one = QPoly::constant(1);
  CHECK(RatFunc(S, S) == RatFunc::constant(1));
  QPoly omS = one - S, om2S = one - S.scale(2);
  RatFunc f(one - S * S, omS * om2S);
  CHECK(f == RatFunc(one + S, om2S));
  CHECK(f.str() == "(1+S)/(1-2*S)");
  RatFunc g((S * S).scale(2) + one, omS * om2S);
  RatFunc g2(((S * S).scale(2) + one) * omS, omS * om2S);
  CHECK(g2 == RatFunc((S * S).scale(2) + one, om2S));
  CHECK(g != g2);
  CHECK_THROWS_AS(RatFunc(one, QPoly()), DomainError);
}

TEST_CASE("rational function arithmetic agrees with series expansion") {
  QPoly S = QPoly::monomial(1, 1), one = QPoly::constant(1);
  RatFunc a(one + S.scale(3), one - S.scale(2)), b(S * S, (one - S) * (one - S));
  auto coeffs = [](const RatFunc& f) {
    std::vector<Rat> v(31, Rat(0));
    for (auto& [e, c] : f.expand(30)) v[static_cast<std::size_t>(e)] = c;
    return v;
  };
  auto ea = coeffs(a), eb = coeffs(b), es = coeffs(a + b), ep = coeffs(a * b);
  CHECK(eb[2] == 1);
  CHECK(eb[5] == 4);
  for (int n = 0; n <= 30; ++n) {
    CHECK(es[n] == ea[n] + eb[n]);
    Rat c = 0;
    for (int i = 0; i <= n; ++i) c += ea[i] * eb[n - i];
    CHECK(ep[n] == c);
  }
  RatFunc lau = RatFunc::monomial(2, -2) + a;
  CHECK(lau.coeff(-2) == 2);
  CHECK(lau.coeff(-1) == 0);
  CHECK(lau.coeff(0) == 1);
  CHECK(lau.eval(Rat(1, 3)) == Rat(18) + Rat(2, 1) / Rat(1, 3));
  CHECK_THROWS_AS(a.eval(Rat(1, 2)), DomainError);
}

TEST_CASE("series inverse, composition and precision tracking") {
  RatDomain R;
  using SR = Series<RatDomain>;
  SR f(R, "t", 0, {1, 1}, 3);
  SR fi = f.inv();
  CHECK(fi.prec() == 3);
  CHECK(fi[0] == 1);
  CHECK(fi[1] == -1);
  CHECK(fi[2] == 1);
  CHECK_THROWS_AS(fi[3], PrecisionError);
  SR t = SR::monomial(R, "t", 1, 1), t2 = SR::monomial(R, "t", 1, 2);
  SR c = t.compose(t2);
  CHECK(c.val() == 2);
  CHECK(c.is_exact());
  CHECK_THROWS_AS(t.compose(SR::constant(R, "t", 1)), DomainError);
  CHECK_THROWS_AS(SR::exact(R, "t", 0, {1, 1}).inv(), PrecisionError);
  SR g(R, "t", -2, {3, 1, 4, 1, 5}, 10);
  SR gi = g.inv();
  CHECK(gi.val() == 2);
  CHECK((g * gi).agrees(SR::constant(R, "t", 1)));
  CHECK((g * gi).prec() == 12);
  CHECK(gi.inv().agrees(g));
  CHECK((g * f).val() == g.val() + f.val());
  SR cut = g.cut(0);
  CHECK(cut.val() == 1);
  CHECK((cut + (g - cut)).agrees(g));
  const FiniteField* F3 = FiniteField::get(3);
  PolyDomain P{F3};
  Series<PolyDomain> nonunit(P, "t", 0, {Poly::var(F3), Poly::constant(F3, 1)}, 5);
  CHECK_THROWS_AS(nonunit.inv(), DomainError);
}

TEST_CASE("series over F_q: self inverse oracle at every precision") {
  const FiniteField* F = FiniteField::get(3);
  FqDomain D{F};
  using SF = Series<FqDomain>;
  for (int N = 1; N <= 20; ++N) {
    SF s(D, "t", 0, {1, 0, 2, 1}, N);
    SF p = s * s.inv();
    CHECK(p.prec() == N);
    CHECK(p.agrees(SF::constant(D, "t", 1)));
  }
}
