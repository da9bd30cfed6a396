#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cusp/field.hpp"

namespace cusp {

struct Point {
  bool inf = true;
  fe x = 0, y = 0;
  static Point infinity() { return Point{}; }
  auto operator<=>(const Point& o) const {
    if (inf != o.inf) return inf ? std::strong_ordering::less : std::strong_ordering::greater;
    if (inf) return std::strong_ordering::equal;
    if (auto c = x <=> o.x; c != 0) return c;
    return y <=> o.y;
  }
  bool operator==(const Point& o) const { return (*this <=> o) == 0; }
};

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q. Coefficients are
// F_q indices and so also valid in every tower extension of F_q.
class WeierstrassCurve {
 public:
  // Throws ParameterError when the model is singular.
  WeierstrassCurve(const FiniteField* F, const std::vector<std::int64_t>& a);

  fe a1, a2, a3, a4, a6;
  const FiniteField* field() const { return F_; }
  fe discriminant() const { return disc_; }

  bool on_curve(const FiniteField* K, fe x, fe y) const;
  fe wy(const FiniteField* K, fe x, fe y) const;  // 2y + a1 x + a3
  fe wx(const FiniteField* K, fe x, fe y) const;  // a1 y - 3x^2 - 2 a2 x - a4
  Point neg(const FiniteField* K, const Point& P) const;
  Point add(const FiniteField* K, const Point& P, const Point& Q) const;
  // Infinity first, then affine points by (x, y) index.
  std::vector<Point> points(const FiniteField* K) const;
  std::vector<Point> rational_points() const { return points(F_); }

 private:
  const FiniteField* F_;
  fe disc_;
};

}  // namespace cusp
