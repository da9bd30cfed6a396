#include "cusp/fqrat.hpp"

#include "cusp/errors.hpp"

namespace cusp {

FqRat::FqRat(Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("zero denominator in F_q(T)");
  const FiniteField* F = den.field();
  if (num.is_zero()) {
    num_ = Poly(F);
    den_ = Poly::constant(F, 1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.deg() > 0) {
    num = num / g;
    den = den / g;
  }
  fe l = F->inv(den.lead());
  num_ = num.scale(l);
  den_ = den.scale(l);
}

FqRat FqRat::parse(const FiniteField* F, const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return FqRat(Poly::parse(F, s));
  Poly d = Poly::parse(F, s.substr(slash + 1));
  if (d.is_zero()) throw ParameterError("zero denominator in '" + s + "'");
  return FqRat(Poly::parse(F, s.substr(0, slash)), d);
}

FqRat FqRat::operator+(const FqRat& o) const {
  if (den_ == o.den_) return FqRat(num_ + o.num_, den_);
  return FqRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FqRat FqRat::operator-(const FqRat& o) const { return *this + (-o); }

FqRat FqRat::operator*(const FqRat& o) const {
  if (is_poly() && o.is_poly()) return FqRat(num_ * o.num_);
  // Cross-cancel first to keep degrees small.
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Poly a = g1.is_zero() ? num_ : num_ / g1, d2 = g1.is_zero() ? o.den_ : o.den_ / g1;
  Poly b = g2.is_zero() ? o.num_ : o.num_ / g2, d1 = g2.is_zero() ? den_ : den_ / g2;
  return FqRat(a * b, d1 * d2);
}

FqRat FqRat::inv() const {
  if (is_zero()) throw DomainError("inverse of zero in F_q(T)");
  return FqRat(den_, num_);
}

FqRat FqRat::operator/(const FqRat& o) const { return *this * o.inv(); }

FqRat FqRat::pow(std::int64_t n) const {
  if (n < 0) return inv().pow(-n);
  return FqRat(num_.pow(static_cast<std::uint64_t>(n)), den_.pow(static_cast<std::uint64_t>(n)), true);
}

}  // namespace cusp
