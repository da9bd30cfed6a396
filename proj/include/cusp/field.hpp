#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cusp {

// Element handle: an index into the owning field. 0 is zero, 1 is one.
// For an extension base[z]/(h) the index is sum digit_i * |base|^i, so the
// base field sits inside as the indices below |base|.
using fe = std::uint32_t;

class FiniteField {
 public:
  // Canonical F_q: prime field, or F_p[z]/(m) with m the least monic
  // irreducible of degree e (coefficients compared from the top down).
  static const FiniteField* get(std::uint64_t q);
  // base[z]/(h) for h monic irreducible over base (low-to-high coefficients).
  static const FiniteField* extension(const FiniteField* base, const std::vector<fe>& h);

  static bool is_prime(std::uint64_t n);
  // (p, e) with q = p^e, or nothing if q is not a prime power.
  static std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t size() const { return q_; }
  unsigned degree() const { return deg_; }
  unsigned abs_degree() const { return absdeg_; }
  const FiniteField* base() const { return base_; }
  const std::vector<fe>& modulus() const { return mod_; }

  fe add(fe a, fe b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t la = log_[a], lb = log_[b];
    std::uint32_t d = lb >= la ? lb - la : lb + (q_ - 1) - la;
    std::int32_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
  }
  fe neg(fe a) const { return a == 0 ? 0 : exp_[log_[a] + half_]; }
  fe sub(fe a, fe b) const { return add(a, neg(b)); }
  fe mul(fe a, fe b) const { return (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]]; }
  fe inv(fe a) const;
  fe div(fe a, fe b) const { return mul(a, inv(b)); }
  fe pow(fe a, std::int64_t n) const;
  fe from_int(std::int64_t n) const;
  fe generator() const { return exp_[1]; }
  // a^|base| (a^p for a prime field).
  fe frob(fe a) const { return pow(a, base_ ? base_->size() : p_); }
  std::uint32_t log(fe a) const { return log_[a]; }
  fe exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

  std::vector<fe> digits(fe a) const;
  fe from_digits(const std::vector<fe>& d) const;
  std::string str(fe a) const;

 private:
  FiniteField() = default;
  void build_prime(std::uint32_t p);
  void build_extension(const FiniteField* base, const std::vector<fe>& h);
  std::vector<fe> vmul(const std::vector<fe>& a, const std::vector<fe>& b) const;
  void tables_from_generator(const std::vector<fe>& g);
  std::vector<fe> digits_from_index(fe a) const;
  fe index_from_digits(const std::vector<fe>& d) const;

  std::uint32_t p_ = 0, q_ = 0;
  unsigned deg_ = 1, absdeg_ = 1;
  const FiniteField* base_ = nullptr;
  std::vector<fe> mod_;
  std::vector<fe> exp_;        // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> zech_;  // log(1 + g^i), -1 when that sum is 0
  std::uint32_t half_ = 0;     // log(-1)
};

}  // namespace cusp
