#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cusp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int ipow(const Int& b, std::uint64_t e);
Rat rpow(const Rat& b, std::int64_t e);
std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);
bool is_integer(const Rat& r);

// Polynomial in one variable with rational coefficients, low to high, trimmed.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
  static QPoly constant(const Rat& c) { return QPoly({c}); }
  static QPoly monomial(const Rat& c, int n);

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat operator[](int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lead() const { return c_.back(); }
  // Exponent of the lowest nonzero term (0 for the zero polynomial).
  int low() const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly scale(const Rat& c) const;
  QPoly shift(int n) const;  // n >= 0
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  QPoly operator/(const QPoly& d) const { return divmod(d).first; }
  QPoly operator%(const QPoly& d) const { return divmod(d).second; }
  Rat eval(const Rat& x) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }
  std::string str(const std::string& var = "S") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

QPoly gcd(QPoly a, QPoly b);  // leading coefficient 1

// Rational function in S over Q. Canonical form: gcd(num, den) = 1 and the
// lowest nonzero coefficient of den equals 1 (so den(0) = 1 whenever den(0) != 0).
class RatFunc {
 public:
  RatFunc() : num_(), den_(QPoly::constant(1)) {}
  RatFunc(QPoly num, QPoly den);
  explicit RatFunc(QPoly num) : RatFunc(std::move(num), QPoly::constant(1)) {}
  static RatFunc constant(const Rat& c) { return RatFunc(QPoly::constant(c)); }
  static RatFunc S() { return RatFunc(QPoly::monomial(1, 1)); }
  // c * S^n for any integer n.
  static RatFunc monomial(const Rat& c, std::int64_t n);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc scale(const Rat& c) const { return RatFunc(num_.scale(c), den_); }
  RatFunc shift(std::int64_t n) const;  // times S^n
  RatFunc pow(std::int64_t n) const;
  // Throws DomainError if x is a pole.
  Rat eval(const Rat& x) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  // Laurent coefficients at S = 0: pairs (exponent, coefficient) for exponents
  // in [lowest, upto], zeros included.
  std::vector<std::pair<std::int64_t, Rat>> expand(std::int64_t upto) const;
  Rat coeff(std::int64_t n) const;
  std::string str(const std::string& var = "S") const;

 private:
  QPoly num_, den_;
};

}  // namespace cusp
