#include "cusp/elliptic.hpp"

#include "cusp/errors.hpp"
#include "cusp/ring.hpp"

namespace cusp {

WeierstrassCurve::WeierstrassCurve(const FiniteField* F, const std::vector<std::int64_t>& a) : F_(F) {
  if (a.size() != 5) throw ParameterError("expected five Weierstrass coefficients a1,a2,a3,a4,a6");
  a1 = field_elem_from_int(F, a[0]);
  a2 = field_elem_from_int(F, a[1]);
  a3 = field_elem_from_int(F, a[2]);
  a4 = field_elem_from_int(F, a[3]);
  a6 = field_elem_from_int(F, a[4]);
  auto c = [&](std::int64_t n) { return F->from_int(n); };
  auto m = [&](fe x, fe y) { return F->mul(x, y); };
  auto ad = [&](fe x, fe y) { return F->add(x, y); };
  fe b2 = ad(m(a1, a1), m(c(4), a2));
  fe b4 = ad(m(c(2), a4), m(a1, a3));
  fe b6 = ad(m(a3, a3), m(c(4), a6));
  fe b8 = F->sub(ad(ad(m(m(a1, a1), a6), m(c(4), m(a2, a6))), m(a2, m(a3, a3))), ad(m(a1, m(a3, a4)), m(a4, a4)));
  // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
  fe d = F->neg(m(m(b2, b2), b8));
  d = F->sub(d, m(c(8), m(b4, m(b4, b4))));
  d = F->sub(d, m(c(27), m(b6, b6)));
  d = ad(d, m(c(9), m(b2, m(b4, b6))));
  disc_ = d;
  if (d == 0) throw ParameterError("singular Weierstrass model (discriminant 0)");
}

bool WeierstrassCurve::on_curve(const FiniteField* K, fe x, fe y) const {
  fe lhs = K->add(K->mul(y, y), K->mul(y, K->add(K->mul(a1, x), a3)));
  fe x2 = K->mul(x, x);
  fe rhs = K->add(K->add(K->mul(x2, x), K->mul(a2, x2)), K->add(K->mul(a4, x), a6));
  return lhs == rhs;
}

fe WeierstrassCurve::wy(const FiniteField* K, fe x, fe y) const {
  return K->add(K->add(K->mul(K->from_int(2), y), K->mul(a1, x)), a3);
}

fe WeierstrassCurve::wx(const FiniteField* K, fe x, fe y) const {
  fe t = K->add(K->add(K->mul(K->from_int(3), K->mul(x, x)), K->mul(K->mul(K->from_int(2), a2), x)), a4);
  return K->sub(K->mul(a1, y), t);
}

Point WeierstrassCurve::neg(const FiniteField* K, const Point& P) const {
  if (P.inf) return P;
  return Point{false, P.x, K->neg(K->add(K->add(P.y, K->mul(a1, P.x)), a3))};
}

Point WeierstrassCurve::add(const FiniteField* K, const Point& P, const Point& Q) const {
  if (P.inf) return Q;
  if (Q.inf) return P;
  if (P.x == Q.x && K->add(K->add(K->add(P.y, Q.y), K->mul(a1, Q.x)), a3) == 0) return Point::infinity();
  fe lam, nu;
  if (P.x != Q.x) {
    fe dx = K->inv(K->sub(Q.x, P.x));
    lam = K->mul(K->sub(Q.y, P.y), dx);
    nu = K->mul(K->sub(K->mul(P.y, Q.x), K->mul(Q.y, P.x)), dx);
  } else {
    fe den = K->inv(wy(K, P.x, P.y));
    fe x2 = K->mul(P.x, P.x);
    fe num = K->add(K->add(K->mul(K->from_int(3), x2), K->mul(K->mul(K->from_int(2), a2), P.x)), K->sub(a4, K->mul(a1, P.y)));
    lam = K->mul(num, den);
    fe n2 = K->add(K->add(K->neg(K->mul(x2, P.x)), K->mul(a4, P.x)), K->sub(K->mul(K->from_int(2), a6), K->mul(a3, P.y)));
    nu = K->mul(n2, den);
  }
  fe x3 = K->sub(K->sub(K->sub(K->add(K->mul(lam, lam), K->mul(a1, lam)), a2), P.x), Q.x);
  fe y3 = K->sub(K->sub(K->neg(K->mul(K->add(lam, a1), x3)), nu), a3);
  return Point{false, x3, y3};
}

std::vector<Point> WeierstrassCurve::points(const FiniteField* K) const {
  std::vector<Point> out{Point::infinity()};
  for (fe x = 0; x < K->size(); ++x)
    for (fe y = 0; y < K->size(); ++y)
      if (on_curve(K, x, y)) out.push_back(Point{false, x, y});
  return out;
}

}  // namespace cusp
