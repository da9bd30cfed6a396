#include "doctest.h"

#include "cusp/boundary.hpp"
#include "cusp/errors.hpp"
#include "samples.hpp"

using namespace cusp;
using namespace cusp::testing;

namespace {

Ideal principal(const Ring& R, const std::string& s) { return R.divisor(R.parse_elem(s)); }

}  // namespace

TEST_CASE("discriminant orders: worked examples") {
  for (std::uint64_t q : {2, 3, 4}) {
    auto R = Ring::polynomial(q);
    for (int r = 2; r <= 4; ++r) {
      CHECK(ord_discriminant(*R, principal(*R, "T"), 0, r).int_order() == 1);
      for (auto s : {"T^2+1", "T^3+T+1"}) {
        Ideal n = principal(*R, s);
        Int qr = ipow(Int(q), static_cast<std::uint64_t>(r));
        Int expect = (ipow(qr, static_cast<std::uint64_t>(R->degree(n))) - 1) / (qr - 1);
        CHECK(ord_discriminant(*R, n, 0, r).int_order() == expect);
      }
    }
  }
  auto E = Ring::parse("elliptic q=2 a=[0,0,1,0,0]");
  Ideal p = E->parse_ideal("P(0,0)");
  const int cp = E->pic_class(p);
  OrderReport o0 = ord_discriminant(*E, p, 0, 2);
  CHECK(o0.int_order() == 6);
  CHECK(o0.values[1].second == Rat(-5, 3));
  OrderReport o1 = ord_discriminant(*E, p, cp, 2);
  CHECK(o1.int_order() == 1);
  CHECK(o1.values[1].second == Rat(-2, 3));
  // Twisting by b = P(0,1) shifts the class.
  Ideal b = E->parse_ideal("P(0,1)");
  for (int c = 0; c < 3; ++c)
    CHECK(ord_discriminant_twisted(*E, p, b, c, 2).order ==
          ord_discriminant(*E, p, E->pic_add(c, E->pic_class(b)), 2).order);
  CHECK_THROWS_AS(ord_discriminant(*E, Ideal{}, 0, 2), ParameterError);
  CHECK_THROWS_AS(ord_discriminant(*E, p, 0, 1), ParameterError);
}

TEST_CASE("discriminant orders are positive integers") {
  for (auto& R : sample_rings()) {
    CAPTURE(R->spec());
    for (int r = 2; r <= 3; ++r)
      for (int d = 1; d <= 3; ++d)
        for (auto& n : R->integral_ideals_of_degree(d))
          for (int c = 0; c < R->class_number(); ++c) {
            OrderReport o = ord_discriminant(*R, n, c, r);
            CHECK(o.integral);
            CHECK(o.order > 0);
          }
  }
}

TEST_CASE("twists and divisors") {
  std::mt19937 rng(3);
  for (auto& R : sample_rings()) {
    CAPTURE(R->spec());
    Ideal n = R->nontrivial_representatives()[0];
    CuspidalDivisor plain = divisor_of_discriminant(*R, n, Ideal{}, 2);
    for (int t = 0; t < 3; ++t) {
      Elem f = random_elem(*R, rng, 2);
      CHECK(divisor_of_discriminant(*R, n, R->divisor(f), 2) == plain);
    }
    for (auto& b : R->representatives()) {
      CuspidalDivisor tw = divisor_of_discriminant(*R, n, b, 2);
      for (int c = 0; c < R->class_number(); ++c) CHECK(tw[c] == plain[R->pic_add(c, R->pic_class(b))]);
    }
  }
  auto P = Ring::polynomial(2);
  CHECK(divisor_of_discriminant(*P, principal(*P, "T"), Ideal{}, 2) == CuspidalDivisor{{0, 1}});
}

TEST_CASE("cuspidal matrix and Frobenius determinant") {
  CHECK(bareiss_det({{2, 1}, {1, 3}}) == 5);
  CHECK(bareiss_det({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}) == -2);
  CHECK(rational_det({{Rat(1, 2), 1}, {1, 3}}) == Rat(1, 2));
  auto P = Ring::polynomial(3);
  DivisorMatrix m = cuspidal_matrix(*P, 2, {principal(*P, "T")});
  CHECK(m.M == std::vector<std::vector<Int>>{{1}});
  CHECK(m.det == 1);
  FrobeniusCheck fp = frobenius_det_crosscheck(*P, 2, {Ideal{}});
  CHECK(fp.det_N == Rat(-1, 8));
  for (auto& R : sample_rings()) {
    CAPTURE(R->spec());
    for (int r = 2; r <= 3; ++r) {
      DivisorMatrix D = cuspidal_matrix(*R, r);
      CHECK(D.M.size() == static_cast<std::size_t>(R->class_number()));
      CHECK(D.det != 0);
      FrobeniusCheck fc = frobenius_det_crosscheck(*R, r);
      CHECK(fc.match);
      CHECK(fc.l_values.size() == static_cast<std::size_t>(R->class_number()));
    }
  }
  auto E = Ring::parse("elliptic q=2 a=[0,0,1,0,0]");
  CHECK(cuspidal_matrix(*E, 2).M.size() == 3);
}

TEST_CASE("division forms and higher Eisenstein series") {
  for (std::uint64_t q : {2, 3}) {
    auto R = Ring::polynomial(q);
    Ideal n = principal(*R, "T");
    for (fe c = 1; c < q; ++c) {
      Elem u1 = R->div(R->constant(c), R->parse_elem("T"));
      OrderReport o = ord_division_form(*R, Ideal{}, n, u1, 2);
      CHECK(o.order == 1);
      CHECK(o.unit == OrderUnit::Tn);
      const int qi = static_cast<int>(q);
      for (int k = 1; k <= qi; ++k) CHECK(ord_higher_eisenstein(*R, Ideal{}, n, u1, k, 2).order == k);
      CHECK(ord_higher_eisenstein(*R, Ideal{}, n, u1, qi + 1, 2).order == 2);
    }
    CHECK(ord_division_form(*R, Ideal{}, n, R->parse_elem("T+1"), 2).order == 0);
    CHECK(ord_higher_eisenstein(*R, Ideal{}, n, R->zero(), 5, 2).order == 0);
    CHECK_THROWS_AS(ord_division_form(*R, Ideal{}, n, R->parse_elem("1/(T^2)"), 2), ParameterError);
  }
  std::mt19937 rng(9);
  for (auto& R : sample_rings()) {
    CAPTURE(R->spec());
    for (int t = 0; t < 5; ++t) {
      Ideal a = random_ideal(*R, rng, -1, 1);
      Ideal n = R->nontrivial_representatives()[0];
      for (auto& u1 : quotient_representatives(*R, ideal_mul(ideal_inv(n), a), a)) {
        OrderReport o = ord_division_form(*R, a, n, u1, 2);
        CHECK((o.order > 0) == !R->contains(a, u1));
      }
    }
  }
}

TEST_CASE("ramification and aggregation") {
  auto P2 = Ring::polynomial(2), P3 = Ring::polynomial(3);
  CHECK(ramification_index(*P2, principal(*P2, "T"), 2) == 2);
  CHECK(ramification_index(*P3, principal(*P3, "T"), 2) == 6);
  AggregationCheck a = aggregation_check(*P2, principal(*P2, "T"), 2);
  CHECK(a.sum_over_u == 2);
  CHECK(a.ramification == 2);
  CHECK(a.ord_delta == 1);
  for (auto& R : sample_rings()) {
    CAPTURE(R->spec());
    for (int r = 2; r <= 3; ++r)
      for (int d = 1; d <= 2; ++d)
        for (auto& n : R->integral_ideals_of_degree(d)) CHECK(aggregation_check(*R, n, r).holds());
  }
}

TEST_CASE("canonical discriminant") {
  for (std::uint64_t q : {2, 3, 5}) {
    auto R = Ring::polynomial(q);
    for (int r = 2; r <= 4; ++r) {
      CanonicalDelta cd = ord_canonical_delta(*R, 0, r);
      CHECK(cd.order.int_order() == 1);
      CHECK(cd.d == 1);
      CHECK(cd.d2 == 2);
      CHECK(cd.weight == ipow(Int(q), static_cast<std::uint64_t>(r)) - 1);
    }
  }
  auto E = Ring::parse("elliptic q=2 a=[0,0,1,0,0]");
  CanonicalDelta ce = ord_canonical_delta(*E, 0, 2);
  CHECK(ce.d == 2);
  CHECK(ce.d2 == 3);
  CHECK(ce.bezout.gcd == 3);
  // (1 - 4) * (-5/3) = 5.
  CHECK(ce.order.int_order() == 5);
  for (auto& R : sample_rings())
    for (int c = 0; c < R->class_number(); ++c) {
      CanonicalDelta cd = ord_canonical_delta(*R, c, 2);
      CHECK(cd.order.order > 0);
      CHECK(cd.type_h == R->d_inf() % static_cast<int>(R->q() - 1));
    }
}
