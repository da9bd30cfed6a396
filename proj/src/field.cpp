#include "cusp/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "cusp/errors.hpp"

namespace cusp {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 23;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, const FiniteField*>& canonical_registry() {
  static std::map<std::uint64_t, const FiniteField*> r;
  return r;
}

std::map<std::pair<const FiniteField*, std::vector<fe>>, std::unique_ptr<FiniteField>>&
extension_registry() {
  static std::map<std::pair<const FiniteField*, std::vector<fe>>, std::unique_ptr<FiniteField>> r;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over Z/p, low to high, used only to find the canonical modulus.
using ipoly = std::vector<std::uint32_t>;

void itrim(ipoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

ipoly imod(ipoly a, const ipoly& m, std::uint32_t p) {
  itrim(a);
  std::uint32_t li = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = std::uint64_t{a.back()} * li % p;
    std::size_t s = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[s + i] = static_cast<std::uint32_t>((a[s + i] + p - (c * m[i]) % p) % p);
    itrim(a);
  }
  return a;
}

bool irreducible_by_trial_division(const ipoly& f, std::uint32_t p) {
  unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      ipoly g(d + 1);
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (imod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<fe> canonical_modulus(std::uint32_t p, unsigned e) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    ipoly f(e + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[e] = 1;
    if (f[0] != 0 && irreducible_by_trial_division(f, p)) return std::vector<fe>(f.begin(), f.end());
  }
  throw ConsistencyError("no irreducible polynomial found");
}

}  // namespace

bool FiniteField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> FiniteField::prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

const FiniteField* FiniteField::get(std::uint64_t q) {
  auto pe = prime_power(q);
  if (!pe) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  if (q > (std::uint64_t{1} << 16)) throw ParameterError("q > 2^16 is not supported");
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = canonical_registry().find(q);
    if (it != canonical_registry().end()) return it->second;
    if (pe->second == 1) {
      auto* f = new FiniteField();
      f->build_prime(pe->first);
      canonical_registry()[q] = f;
      return f;
    }
  }
  const FiniteField* base = get(pe->first);
  const FiniteField* f = extension(base, canonical_modulus(pe->first, pe->second));
  std::lock_guard<std::mutex> lock(registry_mutex());
  canonical_registry()[q] = f;
  return f;
}

const FiniteField* FiniteField::extension(const FiniteField* base, const std::vector<fe>& h) {
  if (h.size() < 2 || h.back() != 1) throw ParameterError("extension modulus must be monic of degree >= 1");
  if (h.size() == 2) return base;
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto key = std::make_pair(base, h);
  auto it = extension_registry().find(key);
  if (it != extension_registry().end()) return it->second.get();
  std::unique_ptr<FiniteField> f(new FiniteField());
  f->build_extension(base, h);
  const FiniteField* out = f.get();
  extension_registry()[key] = std::move(f);
  return out;
}

void FiniteField::build_prime(std::uint32_t p) {
  p_ = q_ = p;
  deg_ = absdeg_ = 1;
  mod_ = {0, 1};
  std::uint32_t g = 1;
  if (p > 2) {
    auto fac = prime_factors(p - 1);
    for (g = 2; g < p; ++g) {
      bool prim = true;
      for (auto l : fac) {
        std::uint64_t r = 1, b = g, e = (p - 1) / l;
        while (e) {
          if (e & 1) r = r * b % p;
          b = b * b % p;
          e >>= 1;
        }
        if (r == 1) {
          prim = false;
          break;
        }
      }
      if (prim) break;
    }
  }
  std::uint32_t n = p - 1;
  exp_.assign(2 * n, 0);
  log_.assign(p, 0);
  std::uint64_t x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = exp_[i + n] = static_cast<fe>(x);
    log_[x] = i;
    x = x * g % p;
  }
  zech_.assign(n, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t s = (exp_[i] + 1) % p;
    zech_[i] = s == 0 ? -1 : static_cast<std::int32_t>(log_[s]);
  }
  half_ = (p == 2) ? 0 : n / 2;
}

std::vector<fe> FiniteField::vmul(const std::vector<fe>& a, const std::vector<fe>& b) const {
  const FiniteField& B = *base_;
  std::vector<fe> prod(2 * deg_ - 1, 0);
  for (unsigned i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < deg_; ++j) prod[i + j] = B.add(prod[i + j], B.mul(a[i], b[j]));
  }
  for (std::size_t k = prod.size(); k-- > deg_;) {
    fe c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i < deg_; ++i) prod[k - deg_ + i] = B.sub(prod[k - deg_ + i], B.mul(c, mod_[i]));
    prod[k] = 0;
  }
  prod.resize(deg_);
  return prod;
}

void FiniteField::build_extension(const FiniteField* base, const std::vector<fe>& h) {
  base_ = base;
  mod_ = h;
  deg_ = static_cast<unsigned>(h.size() - 1);
  p_ = base->p();
  absdeg_ = base->abs_degree() * deg_;
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < deg_; ++i) {
    Q *= base->size();
    if (Q > kMaxFieldSize) throw ParameterError("extension field too large for table arithmetic");
  }
  q_ = static_cast<std::uint32_t>(Q);
  auto fac = prime_factors(Q - 1);
  std::vector<fe> one(deg_, 0);
  one[0] = 1;
  auto vpow = [&](std::vector<fe> b, std::uint64_t e) {
    std::vector<fe> r = one;
    while (e) {
      if (e & 1) r = vmul(r, b);
      b = vmul(b, b);
      e >>= 1;
    }
    return r;
  };
  for (fe cand = 2; cand < q_; ++cand) {
    std::vector<fe> c = digits_from_index(cand);
    bool prim = true;
    for (auto l : fac)
      if (vpow(c, (Q - 1) / l) == one) {
        prim = false;
        break;
      }
    if (prim) {
      tables_from_generator(c);
      return;
    }
  }
  throw ConsistencyError("extension modulus is not irreducible");
}

void FiniteField::tables_from_generator(const std::vector<fe>& g) {
  std::uint32_t n = q_ - 1;
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  std::vector<fe> x(deg_, 0);
  x[0] = 1;
  std::vector<bool> seen(q_, false);
  for (std::uint32_t i = 0; i < n; ++i) {
    fe idx = index_from_digits(x);
    if (seen[idx]) throw ConsistencyError("extension modulus is not irreducible");
    seen[idx] = true;
    exp_[i] = exp_[i + n] = idx;
    log_[idx] = i;
    x = vmul(x, g);
  }
  const std::uint32_t b = base_->size();
  zech_.assign(n, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    fe e = exp_[i];
    fe d0 = e % b;
    fe s = e - d0 + base_->add(d0, 1);
    zech_[i] = s == 0 ? -1 : static_cast<std::int32_t>(log_[s]);
  }
  half_ = (p_ == 2) ? 0 : n / 2;
}

std::vector<fe> FiniteField::digits_from_index(fe a) const {
  std::vector<fe> d(deg_, 0);
  const std::uint32_t b = base_ ? base_->size() : q_;
  for (unsigned i = 0; i < deg_; ++i) {
    d[i] = a % b;
    a /= b;
  }
  return d;
}

fe FiniteField::index_from_digits(const std::vector<fe>& d) const {
  const std::uint32_t b = base_ ? base_->size() : q_;
  fe idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * b + d[i];
  return idx;
}

fe FiniteField::inv(fe a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

fe FiniteField::pow(fe a, std::int64_t n) const {
  if (a == 0) {
    if (n == 0) return 1;
    if (n < 0) throw DomainError("negative power of zero");
    return 0;
  }
  const std::int64_t m = q_ - 1;
  std::int64_t e = n % m;
  if (e < 0) e += m;
  std::uint64_t l = (static_cast<unsigned __int128>(log_[a]) * static_cast<std::uint64_t>(e)) % m;
  return exp_[l];
}

fe FiniteField::from_int(std::int64_t n) const {
  if (base_) return base_->from_int(n);
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<fe>(r);
}

std::vector<fe> FiniteField::digits(fe a) const { return digits_from_index(a); }

fe FiniteField::from_digits(const std::vector<fe>& d) const {
  if (d.size() > deg_) throw ParameterError("too many digits for field element");
  return index_from_digits(d);
}

std::string FiniteField::str(fe a) const {
  if (!base_) return std::to_string(a);
  auto d = digits(a);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    std::string c = base_->str(d[i]);
    if (base_->base() && i > 0) c = "(" + c + ")";
    std::string term;
    if (i == 0) {
      term = c;
    } else {
      term = (d[i] == 1 ? "" : c + "*") + std::string(i == 1 ? "z" : "z^" + std::to_string(i));
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace cusp
