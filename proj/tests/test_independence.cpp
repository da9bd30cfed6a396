#include "doctest.h"

#include <random>

#include "cusp/errors.hpp"
#include "cusp/expansions.hpp"
#include "cusp/independence.hpp"
#include "samples.hpp"

using namespace cusp;
using namespace cusp::testing;

TEST_CASE("embeddings at infinity") {
  auto P = Ring::polynomial(3);
  Completion CP(P);
  KSeries t = CP.embed(P->parse_elem("T"), 6);
  CHECK(t.val() == -1);
  CHECK(t.terms().size() == 1);
  // Shifted: the leading digit of a polynomial is its g-adic leading digit.
  auto S = Ring::parse("shifted q=2 g=T^2+T+1");
  Completion CS(S);
  const Poly g = S->infinity_poly();
  for (auto s : {"T", "T+1", "T^3", "T^5+T^2+1", "T^4+T^2+1"}) {
    Poly f = Poly::parse(S->field(), s, 'T');
    KSeries e = CS.embed(S->from_poly(f), 8);
    int v = f.valuation(g);
    CHECK(e.val() == v);
    Poly lead = (f / g.pow(static_cast<std::uint64_t>(v))) % g;
    CHECK(e.lead() == static_cast<fe>(lead.encode()));
    // T maps to its g-adic digit T at pi^0.
    if (std::string(s) == "T") CHECK(e[0] == static_cast<fe>(S->q()));
  }
  CHECK(CS.embed(S->from_poly(g), 4).terms() == std::vector<std::pair<std::int64_t, fe>>{{1, 1}});
  // Elliptic: x has valuation -2, y valuation -3, and the curve equation holds.
  for (auto spec : {"elliptic q=2 a=[0,0,1,0,0]", "elliptic q=3 a=[0,0,0,2,1]", "elliptic q=2 a=[1,0,0,0,1]"}) {
    auto E = Ring::parse(spec);
    Completion CE(E);
    KSeries x = CE.coordinate(12), y = CE.y_series(12);
    CHECK(x.val() == -2);
    CHECK(y.val() == -3);
    CHECK(x.lead() == 1);
    KSeries lhs = y * y + y * (KSeries::constant(x.domain(), "pi", E->curve_b()[0]) + x.scale(E->curve_b()[1]));
    KSeries rhs = x * x * x + x * x.scale(E->curve_c()[2]) + x.scale(E->curve_c()[1]) + KSeries::constant(x.domain(), "pi", E->curve_c()[0]);
    KSeries diff = lhs - rhs;
    CHECK(diff.is_zero());
    CHECK(diff.prec() >= 4);
  }
}

TEST_CASE("embedding is a valuation-preserving homomorphism") {
  std::mt19937 rng(17);
  for (auto& R : sample_rings()) {
    CAPTURE(R->spec());
    Completion C(R);
    for (int t = 0; t < 20; ++t) {
      Elem a = random_elem(*R, rng, 3), b = random_elem(*R, rng, 3);
      KSeries ea = C.embed(a, 10), eb = C.embed(b, 10);
      CHECK(ea.val() == C.valuation(a));
      CHECK(C.embed(R->mul(a, b), 6).agrees((ea * eb).truncate(6)));
      Elem s = R->add(a, b);
      if (!s.is_zero()) CHECK(C.embed(s, 6).agrees((ea + eb).truncate(6)));
    }
  }
}

TEST_CASE("elements of inverse representatives have absolute value at least 1") {
  for (auto& R : sample_rings()) {
    CAPTURE(R->spec());
    for (auto& a : R->representatives())
      for (auto& x : R->ideal_elements(ideal_inv(a), 0))
        if (!x.is_zero()) CHECK(R->elem_degree(x) >= 0);
    // Degree-0 elements of A are the q - 1 constants, giving the diagonal residue 1.
    int units = 0;
    for (auto& x : R->ideal_elements(Ideal{}, 0)) units += !x.is_zero();
    CHECK(units == static_cast<int>(R->q() - 1));
  }
}

TEST_CASE("M-matrix certificate") {
  for (auto& R : sample_rings()) {
    CAPTURE(R->spec());
    const int q1 = static_cast<int>(R->q() - 1);
    const std::int64_t P = R->d_inf() >= 3 ? 3 : 4;
    for (int k : {q1, 2 * q1}) {
      CAPTURE(k);
      MMatrix m = m_matrix(R, k, P);
      IndependenceReport rep = independence_certificate(m);
      CHECK(rep.ok());
      for (auto& v : rep.violations) MESSAGE(v);
      // Doubling the precision changes no valuation or residue.
      if (R->d_inf() <= 2) {
        IndependenceReport rep2 = independence_certificate(m_matrix(R, k, 2 * P));
        for (std::size_t i = 0; i < rep.valuation.size(); ++i)
          for (std::size_t j = 0; j < rep.valuation.size(); ++j) {
            CHECK(std::min(rep2.valuation[i][j], P) == rep.valuation[i][j]);
            CHECK(rep2.residue[i][j] == rep.residue[i][j]);
          }
      }
    }
  }
  CHECK_THROWS_AS(m_matrix(Ring::polynomial(3), 1), ParameterError);
  auto P = Ring::polynomial(2);
  MMatrix mp = m_matrix(P, 1, 8);
  CHECK(mp.E.size() == 1);
  CHECK(mp.E[0][0][0] == 1);
}

TEST_CASE("the untransposed orientation is lower triangular") {
  // On shifted rings the degree-0 units of a^-1 happen to cancel mod pi, so only
  // the elliptic rings separate the two orientations.
  for (auto spec : {"elliptic q=2 a=[0,0,1,0,0]", "elliptic q=3 a=[0,0,0,2,1]"}) {
    auto R = Ring::parse(spec);
    IndependenceReport rep = independence_certificate(m_matrix(R, static_cast<int>(R->q() - 1), 4, false));
    CHECK_FALSE(rep.upper);
    CHECK(rep.unit_diagonal);
  }
}

TEST_CASE("lattice sums in K_inf match the Carlitz Eisenstein values") {
  for (std::uint64_t q : {2, 3}) {
    auto R = Ring::polynomial(q);
    const int qi = static_cast<int>(q);
    const std::int64_t P = 12;
    // M(A, A) = sum over monic t of t^-k; the full lattice sum is -M.
    KSeries s1 = -m_matrix(R, qi - 1, P).E[0][0];
    KSeries s2 = -m_matrix(R, qi * qi - 1, P).E[0][0];
    CHECK(s1[0] == R->field()->neg(1));
    KSeries ratio = (s2 * s1.inv(P).pow(qi + 1)).truncate(P);
    auto E = eisenstein_from_exp(carlitz_exp(R->field(), 2), 2);
    CHECK_FALSE(E[1].is_zero());
    FqRat x = E[2] / E[1].pow(qi + 1);
    Completion C(R);
    KSeries expect = C.embed(R->make(x.num(), Poly(R->field()), x.den()), P);
    CHECK(ratio.agrees(expect));
    CHECK(ratio.prec() == P);
  }
}
