#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cusp/field.hpp"

namespace cusp {

// Dense univariate polynomial over a FiniteField, coefficients low to high,
// trimmed so the leading coefficient is nonzero. deg(0) = -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const FiniteField* F) : F_(F) {}
  Poly(const FiniteField* F, std::vector<fe> c) : F_(F), c_(std::move(c)) { trim(); }

  static Poly constant(const FiniteField* F, fe c) { return Poly(F, {c}); }
  static Poly monomial(const FiniteField* F, fe c, int n);
  static Poly var(const FiniteField* F) { return monomial(F, 1, 1); }
  static Poly from_ints(const FiniteField* F, const std::vector<std::int64_t>& c);
  // Parses sums of terms like 2*T^3, T, 1 (coefficients are integers read
  // as field element indices); str() emits this form. Throws ParameterError on bad syntax.
  static Poly parse(const FiniteField* F, const std::string& s, char var = 'T');
  // Inverse of encode(): base-q digits are the coefficient indices, low first.
  static Poly decode(const FiniteField* F, std::uint64_t code);

  const FiniteField* field() const { return F_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  fe lead() const { return c_.empty() ? 0 : c_.back(); }
  fe operator[](int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
  const std::vector<fe>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(fe c) const;
  Poly shift(int n) const;  // times T^n, n >= 0
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  // Euclidean division; throws DomainError on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  bool divisible_by(const Poly& d) const { return divmod(d).second.is_zero(); }
  // Largest k with d^k | *this (d non-constant, *this nonzero).
  int valuation(const Poly& d) const;

  Poly monic() const;
  Poly pow(std::uint64_t n) const;
  Poly powmod(std::uint64_t n, const Poly& m) const;
  Poly derivative() const;
  Poly compose(const Poly& inner) const;
  fe eval(fe x) const;
  // Coefficient-wise image under an embedding of F into a larger field G
  // (index-preserving for the tower embeddings used here), evaluated at x.
  fe eval_in(const FiniteField* G, fe x) const;
  // f(T)^q where q = |F|: coefficient-fixed, T -> T^q.
  Poly frobenius() const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  // Canonical order: degree first, then coefficients from the top down.
  bool operator<(const Poly& o) const;
  // sum c_i q^i; monotone in the canonical order for fixed degree.
  std::uint64_t encode() const;

  std::string str(char var = 'T') const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  const FiniteField* F_ = nullptr;
  std::vector<fe> c_;
};

Poly gcd(Poly a, Poly b);  // monic, or zero if both are zero
// (g, s, t) with s*a + t*b = g monic.
struct Xgcd {
  Poly g, s, t;
};
Xgcd xgcd(const Poly& a, const Poly& b);

bool is_irreducible(const Poly& f);
// All monic irreducibles of degree d in canonical order. Count is checked
// against (1/d) sum_{e|d} mu(e) q^{d/e}.
std::vector<Poly> irreducible_polys(const FiniteField* F, int d);
std::uint64_t irreducible_count(std::uint64_t q, int d);
int integer_mobius(std::uint64_t n);
// Monic irreducible factors with multiplicities, canonical order; the unit is dropped.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

}  // namespace cusp
