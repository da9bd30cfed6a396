#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cusp/rational.hpp"

namespace cusp {

// m-th cyclotomic polynomial over Q (integer coefficients).
QPoly cyclotomic_poly(std::uint32_t m);

// Element of Q(zeta_m), reduced modulo Phi_m.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(std::uint32_t m, const Rat& c);
  // zeta_m^j for any integer j.
  static Cyclo zeta(std::uint32_t m, std::int64_t j);

  std::uint32_t order() const { return m_; }
  const QPoly& poly() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  std::optional<Rat> rational() const;

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo scale(const Rat& c) const;
  bool operator==(const Cyclo& o) const { return m_ == o.m_ && v_ == o.v_; }
  std::string str() const;

 private:
  Cyclo(std::uint32_t m, QPoly v);
  std::uint32_t m_ = 1;
  QPoly v_;
};

}  // namespace cusp
