#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cusp/cyclo.hpp"
#include "cusp/rational.hpp"
#include "cusp/ring.hpp"

namespace cusp {

// rational(S) + sum polar[e] S^e. The polar part is nonempty only for coset zetas.
struct ZetaFunction {
  RatFunc rational;
  std::map<std::int64_t, Rat> polar;

  ZetaFunction operator+(const ZetaFunction& o) const;
  ZetaFunction operator-(const ZetaFunction& o) const;
  ZetaFunction scale(const Rat& c) const;
  ZetaFunction shift(std::int64_t n) const;  // times S^n
  // All Laurent coefficients from the lowest exponent through upto.
  std::map<std::int64_t, Rat> expand(std::int64_t upto) const;
  Rat coeff(std::int64_t n) const;
  // Value at S = x; DomainError at a pole.
  Rat eval(const Rat& x) const;
  bool operator==(const ZetaFunction& o) const;
  std::string str() const;
};

// Value at s = 1 - r, i.e. at S = q^(r-1).
Rat special_value(const ZetaFunction& z, std::uint64_t q, int r);

struct CurveZeta {
  QPoly P;
  std::uint64_t q = 0;
  int genus = 0;
  std::int64_t trace = 0;  // t in P = q S^2 - t S + 1
  RatFunc Z;               // P / ((1 - S)(1 - q S))
  std::int64_t h_curve = 1;
};

// Checks deg P = 2g, P(0) = 1, leading coefficient q^g, P(1) = h(X), the
// functional equation and t^2 <= 4q; ConsistencyError otherwise.
CurveZeta curve_zeta(const Ring& R);
// Z_A = Z_K (1 - S^d_inf).
ZetaFunction ring_zeta(const Ring& R);
// Number of integral ideals of degree n in the class, from Riemann-Roch.
Int class_ideal_count(const Ring& R, int cls, std::int64_t n);
// Z_(c); the head below the stable range is also enumerated and must agree.
ZetaFunction class_zeta(const Ring& R, int cls);
// Z_{0,a} = (q - 1) S^deg a Z_(a^-1).
ZetaFunction zero_coset_zeta(const Ring& R, const Ideal& a);
// Z_{x,a}: equals Z_{0,a} when x in a, otherwise Q_r Z_{0,a} + q^w S^r.
ZetaFunction coset_zeta(const Ring& R, const Elem& x, const Ideal& a);
// Z_{x,a} coefficients up to degree upto by enumerating the coset.
std::map<std::int64_t, Int> coset_zeta_brute(const Ring& R, const Elem& x, const Ideal& a, std::int64_t upto);

// Character of Pic(A): chi(c) = zeta_m^exps[c].
struct Character {
  std::uint32_t m = 1;
  std::vector<std::int64_t> exps;
  bool trivial() const;
};
std::uint32_t pic_exponent(const Ring& R);
std::vector<Character> characters(const Ring& R);

// L(chi, S) = sum_j zeta_m^j R_j(S).
struct LFunction {
  Character chi;
  std::vector<RatFunc> parts;
  Cyclo value(std::uint64_t q, int r) const;
  // The rational function when every coefficient lies in Q.
  bool is_rational() const;
  RatFunc rational() const;
  std::string str() const;
};
LFunction l_function(const Ring& R, const Character& chi);

}  // namespace cusp
