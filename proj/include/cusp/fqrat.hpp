#pragma once

#include <string>

#include "cusp/poly.hpp"

namespace cusp {

// Element of F_q(T): num/den with den monic and gcd(num, den) = 1.
class FqRat {
 public:
  FqRat() = default;
  explicit FqRat(const FiniteField* F) : num_(F), den_(Poly::constant(F, 1)) {}
  explicit FqRat(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}
  FqRat(Poly num, Poly den);
  static FqRat constant(const FiniteField* F, fe c) { return FqRat(Poly::constant(F, c)); }
  static FqRat T(const FiniteField* F) { return FqRat(Poly::var(F)); }
  // "P" or "P/Q" with P, Q in the syntax of Poly::parse.
  static FqRat parse(const FiniteField* F, const std::string& s);

  const FiniteField* field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.deg() == 0; }
  // deg num - deg den; -1e9 for zero.
  int deg() const { return is_zero() ? -1000000000 : num_.deg() - den_.deg(); }

  FqRat operator+(const FqRat& o) const;
  FqRat operator-(const FqRat& o) const;
  FqRat operator-() const { return FqRat(-num_, den_, true); }
  FqRat operator*(const FqRat& o) const;
  FqRat operator/(const FqRat& o) const;
  FqRat& operator+=(const FqRat& o) { return *this = *this + o; }
  FqRat& operator-=(const FqRat& o) { return *this = *this - o; }
  FqRat& operator*=(const FqRat& o) { return *this = *this * o; }
  FqRat inv() const;
  FqRat pow(std::int64_t n) const;
  // x^q: coefficients are fixed, T -> T^q.
  FqRat frob() const { return FqRat(num_.frobenius(), den_.frobenius(), true); }
  bool operator==(const FqRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const FqRat& o) const { return !(*this == o); }
  // "NUM" when the denominator is 1, else "NUM/DEN"; parse() reads both.
  std::string str() const { return is_poly() ? num_.str() : num_.str() + "/" + den_.str(); }

 private:
  FqRat(Poly num, Poly den, bool /*reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_, den_;
};

struct FqRatDomain {
  using value_type = FqRat;
  const FiniteField* F;
  FqRat zero() const { return FqRat(F); }
  FqRat one() const { return FqRat::constant(F, 1); }
  FqRat add(const FqRat& a, const FqRat& b) const { return a + b; }
  FqRat sub(const FqRat& a, const FqRat& b) const { return a - b; }
  FqRat neg(const FqRat& a) const { return -a; }
  FqRat mul(const FqRat& a, const FqRat& b) const { return a * b; }
  FqRat inv(const FqRat& a) const { return a.inv(); }
  bool is_zero(const FqRat& a) const { return a.is_zero(); }
  bool eq(const FqRat& a, const FqRat& b) const { return a == b; }
  std::string str(const FqRat& a) const { return a.str(); }
};

}  // namespace cusp
