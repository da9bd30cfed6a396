#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cusp/rational.hpp"

namespace cusp {

// Laurent monomial in named generators: generator -> exponent (nonzero).
using Monomial = std::map<std::string, std::int64_t>;

// Free commutative ring over Q on declared generators of fixed integer weight.
class GradedRing {
 public:
  void declare(const std::string& name, std::int64_t weight);
  bool has(const std::string& name) const { return w_.count(name) != 0; }
  std::int64_t weight(const std::string& name) const;
  std::int64_t weight(const Monomial& m) const;

 private:
  std::map<std::string, std::int64_t> w_;
};

class GradedElem {
 public:
  GradedElem() = default;
  static GradedElem constant(const Rat& c);
  static GradedElem gen(const std::string& name, std::int64_t exp = 1);
  static GradedElem term(const Rat& c, Monomial m);

  const std::map<Monomial, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  GradedElem operator+(const GradedElem& o) const;
  GradedElem operator-(const GradedElem& o) const;
  GradedElem operator*(const GradedElem& o) const;
  GradedElem scale(const Rat& c) const;
  bool operator==(const GradedElem& o) const { return t_ == o.t_; }
  std::string str() const;

 private:
  std::map<Monomial, Rat> t_;  // no zero coefficients
};

std::string monomial_str(const Monomial& m);

struct Inhomogeneous {
  // Monomials whose weight differs from that of the first monomial.
  std::vector<std::pair<Monomial, std::int64_t>> offending;
  std::int64_t reference_weight = 0;
};

// The common weight of all monomials, or the report of those that disagree.
// The zero element has weight 0 by convention.
std::variant<std::int64_t, Inhomogeneous> graded_weight_check(const GradedRing& R, const GradedElem& e);

}  // namespace cusp
