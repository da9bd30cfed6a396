#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cusp/field.hpp"
#include "cusp/linalg.hpp"
#include "cusp/poly.hpp"

namespace cusp {

enum class Family { Polynomial, Shifted, Elliptic };

// Canonical place descriptor; the default ordering is the tie-break order.
// Genus 0: a = encode(monic irreducible), b = 0; the classical infinite place
// of F_q(T) in the shifted family has a = max. Elliptic: (a, b) are the
// indices of the least point of the Frobenius orbit in the canonical field
// of degree deg over F_q.
struct PlaceKey {
  std::int32_t deg = 0;
  std::uint64_t a = 0, b = 0;
  auto operator<=>(const PlaceKey&) const = default;
};

inline constexpr std::uint64_t kClassicalInfinity = std::numeric_limits<std::uint64_t>::max();

// Fractional ideal: place -> nonzero exponent.
using Ideal = std::map<PlaceKey, std::int64_t>;

Ideal ideal_mul(const Ideal& a, const Ideal& b);
Ideal ideal_inv(const Ideal& a);
Ideal ideal_pow(const Ideal& a, std::int64_t n);
bool ideal_integral(const Ideal& a);
// 0 if some exponent is >= 2, else (-1)^(number of primes). Fractional input is rejected.
int ideal_mobius(const Ideal& a);

// Field element (u + v*y)/d with d monic and gcd(u, v, d) = 1; v = 0 in genus 0.
struct Elem {
  Poly u, v, d;
  bool is_zero() const { return u.is_zero() && v.is_zero(); }
  bool operator==(const Elem& o) const { return u == o.u && v == o.v && d == o.d; }
};

inline constexpr std::int64_t kMinusInfinity = std::numeric_limits<std::int64_t>::min();

// Basis of a_N = { x in a : deg x <= N } over a shared denominator:
// element i is (nums[i].first + nums[i].second * y) / den.
struct IdealSpace {
  Poly den;
  std::vector<std::pair<Poly, Poly>> nums;
  int dim() const { return static_cast<int>(nums.size()); }
};

struct CosetMin {
  std::int64_t r;
  std::int64_t w;
};

class Ring {
 public:
  virtual ~Ring() = default;

  // "poly q=3", "shifted q=2 g=T^2+T+1", "elliptic q=2 a=[a1,a2,a3,a4,a6]".
  static std::shared_ptr<const Ring> parse(const std::string& spec);
  static std::shared_ptr<const Ring> polynomial(std::uint64_t q);
  static std::shared_ptr<const Ring> shifted(std::uint64_t q, const std::string& g);
  static std::shared_ptr<const Ring> elliptic(std::uint64_t q, const std::vector<std::int64_t>& a);

  Family family() const { return fam_; }
  const FiniteField* field() const { return F_; }
  std::uint64_t q() const { return F_->size(); }
  int genus() const { return fam_ == Family::Elliptic ? 1 : 0; }
  int d_inf() const { return dinf_; }
  std::int64_t class_number() const { return pic_order(); }
  virtual std::string spec() const = 0;
  // Variable name of the coordinate polynomial ring: T or x.
  char var() const { return fam_ == Family::Elliptic ? 'x' : 'T'; }

  // Places.
  virtual std::vector<PlaceKey> places_of_degree(int d) const = 0;
  std::vector<PlaceKey> places_up_to(int D) const;
  virtual std::string place_name(const PlaceKey& p) const = 0;
  virtual PlaceKey parse_place(const std::string& s) const = 0;
  int place_degree(const PlaceKey& p) const { return p.deg; }

  // Ideals.
  std::int64_t degree(const Ideal& a) const;
  std::string ideal_str(const Ideal& a) const;
  // Factors joined by '*'; each a place name optionally followed by ^e. "A" is the unit ideal.
  Ideal parse_ideal(const std::string& s) const;
  Ideal place_ideal(const PlaceKey& p, std::int64_t e = 1) const { return Ideal{{p, e}}; }
  // All integral ideals of degree n, canonical order.
  std::vector<Ideal> integral_ideals_of_degree(int n) const;
  std::vector<Ideal> ideals_of_degree(int cls, int n) const;
  // One integral ideal per class, minimal degree, unit ideal first, ties lexicographic.
  std::vector<Ideal> representatives() const;
  // One integral ideal per class coprime to n, chosen minimal in degree then lexicographic.
  std::vector<Ideal> representatives_coprime(const Ideal& n) const;
  // Nontrivial integral representatives: the unit ideal is replaced by the least
  // proper principal ideal.
  std::vector<Ideal> nontrivial_representatives() const;

  // Picard group, elements 0..h-1 with 0 the identity.
  virtual std::int64_t pic_order() const = 0;
  virtual int pic_add(int a, int b) const = 0;
  virtual int pic_neg(int a) const = 0;
  virtual std::string pic_str(int c) const = 0;
  virtual int place_class(const PlaceKey& p) const = 0;
  int pic_class(const Ideal& a) const;
  int pic_mul(int a, std::int64_t n) const;

  // Elements.
  Elem make(Poly u, Poly v, Poly d) const;
  Elem from_poly(const Poly& u) const { return make(u, Poly(F_), Poly::constant(F_, 1)); }
  Elem constant(fe c) const { return from_poly(Poly::constant(F_, c)); }
  Elem zero() const { return constant(0); }
  Elem one() const { return constant(1); }
  Elem y() const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, fe c) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  // Norm to the coordinate field: u^2 - u v b - v^2 c (times nothing for genus 0).
  Poly norm_numerator(const Elem& a) const;
  // Pole order at infinity scaled so |x| = q^deg x; kMinusInfinity for zero.
  virtual std::int64_t elem_degree(const Elem& x) const = 0;
  virtual std::int64_t valuation(const Elem& x, const PlaceKey& p) const = 0;
  // Finite part of the principal divisor.
  virtual Ideal divisor(const Elem& x) const = 0;
  bool contains(const Ideal& a, const Elem& x) const;
  std::string elem_str(const Elem& x) const;
  // "NUM" or "(NUM)/(DEN)"; terms c*T^i (genus 0) or c*x^i*y^j (elliptic).
  Elem parse_elem(const std::string& s) const;
  // Curve data y^2 + b(x) y = c(x); zero polynomials in genus 0.
  const Poly& curve_b() const { return b_; }
  const Poly& curve_c() const { return c_; }
  // The polynomial g defining the place at infinity of a shifted ring; zero otherwise.
  virtual Poly infinity_poly() const { return Poly(F_); }

  // Riemann-Roch spaces.
  // dim L(a + m*inf) = { f : v_P(f) >= -a_P, v_inf(f) >= -m }.
  virtual std::int64_t riemann_roch(const Ideal& a, std::int64_t m) const = 0;
  virtual IdealSpace ideal_space(const Ideal& a, std::int64_t N) const = 0;
  // Predicted dim a_N.
  std::int64_t ideal_space_dim(const Ideal& a, std::int64_t N) const;
  Elem space_elem(const IdealSpace& s, const FqVec& coords) const;
  // All elements of a_N (q^dim of them, dim <= 20), canonical coordinate order.
  std::vector<Elem> ideal_elements(const Ideal& a, std::int64_t N) const;

  // r = min deg of the coset x + a, w = dim a_r. Throws DomainError if x in a.
  CosetMin coset_min_degree(const Elem& x, const Ideal& a) const;
  // Coordinates of the numerators of xs over a common denominator.
  FqMat coordinates(const std::vector<Elem>& xs) const;

 protected:
  Ring(Family f, const FiniteField* F, int dinf) : fam_(f), F_(F), dinf_(dinf), b_(F), c_(F) {}
  // Places that can be poles of x (beyond those of the ideal support).
  virtual std::vector<PlaceKey> pole_candidates(const Elem& x) const = 0;

  Family fam_;
  const FiniteField* F_;
  int dinf_;
  Poly b_, c_;

 private:
  mutable std::mutex ideal_mu_;
  mutable std::map<int, std::vector<Ideal>> ideal_cache_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Field element from an integer: residue for prime fields, index otherwise.
fe field_elem_from_int(const FiniteField* F, std::int64_t n);

}  // namespace cusp
