#include "cusp/cyclo.hpp"

#include <map>
#include <mutex>

#include "cusp/errors.hpp"

namespace cusp {

QPoly cyclotomic_poly(std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::uint32_t, QPoly> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  if (m == 0) throw ParameterError("cyclotomic order must be positive");
  // x^m - 1 = prod_{d | m} Phi_d
  QPoly p = QPoly::monomial(1, static_cast<int>(m)) - QPoly::constant(1);
  for (std::uint32_t d = 1; d < m; ++d)
    if (m % d == 0) p = p / cyclotomic_poly(d);
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(m, p);
  return p;
}

Cyclo::Cyclo(std::uint32_t m, const Rat& c) : m_(m), v_(QPoly::constant(c)) {}
Cyclo::Cyclo(std::uint32_t m, QPoly v) : m_(m), v_(std::move(v) % cyclotomic_poly(m)) {}

Cyclo Cyclo::zeta(std::uint32_t m, std::int64_t j) {
  std::int64_t e = ((j % m) + m) % m;
  return Cyclo(m, QPoly::monomial(1, static_cast<int>(e)));
}

std::optional<Rat> Cyclo::rational() const {
  if (v_.deg() <= 0) return v_[0];
  return std::nullopt;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  if (m_ != o.m_) throw ParameterError("cyclotomic orders differ");
  return Cyclo(m_, v_ + o.v_);
}
Cyclo Cyclo::operator-(const Cyclo& o) const {
  if (m_ != o.m_) throw ParameterError("cyclotomic orders differ");
  return Cyclo(m_, v_ - o.v_);
}
Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (m_ != o.m_) throw ParameterError("cyclotomic orders differ");
  return Cyclo(m_, v_ * o.v_);
}
Cyclo Cyclo::scale(const Rat& c) const { return Cyclo(m_, v_.scale(c)); }

std::string Cyclo::str() const { return v_.str("z" + std::to_string(m_)); }

}  // namespace cusp
