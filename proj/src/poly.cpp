#include "cusp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "cusp/errors.hpp"

namespace cusp {

Poly Poly::monomial(const FiniteField* F, fe c, int n) {
  std::vector<fe> v(n + 1, 0);
  v[n] = c;
  return Poly(F, std::move(v));
}

Poly Poly::from_ints(const FiniteField* F, const std::vector<std::int64_t>& c) {
  std::vector<fe> v;
  v.reserve(c.size());
  for (auto x : c) v.push_back(F->from_int(x));
  return Poly(F, std::move(v));
}

Poly Poly::parse(const FiniteField* F, const std::string& s, char var) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ParameterError("empty polynomial");
  Poly out(F);
  std::size_t i = 0;
  auto read_int = [&](std::int64_t& v) {
    std::size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    if (j == i) return false;
    v = std::stoll(t.substr(i, j - i));
    i = j;
    return true;
  };
  auto coef = [&](std::int64_t c) -> fe {
    if (!F->base()) return F->from_int(c);
    if (c < 0 || c >= static_cast<std::int64_t>(F->size()))
      throw ParameterError("coefficient index out of range for F_" + std::to_string(F->size()));
    return static_cast<fe>(c);
  };
  bool first = true;
  while (i < t.size()) {
    bool negative = false;
    if (t[i] == '+' || t[i] == '-') {
      negative = t[i] == '-';
      ++i;
    } else if (!first) {
      throw ParameterError("bad polynomial '" + s + "'");
    }
    first = false;
    std::int64_t c = 1;
    bool have_c = read_int(c);
    int e = 0;
    if (i < t.size() && t[i] == '*') {
      if (!have_c) throw ParameterError("bad polynomial '" + s + "'");
      ++i;
    }
    if (i < t.size() && t[i] == var) {
      ++i;
      e = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        std::int64_t ee;
        if (!read_int(ee)) throw ParameterError("bad exponent in '" + s + "'");
        e = static_cast<int>(ee);
      }
    } else if (!have_c) {
      throw ParameterError("bad polynomial '" + s + "'");
    }
    fe cf = coef(c);
    if (negative) cf = F->neg(cf);
    out += monomial(F, cf, e);
  }
  return out;
}

Poly Poly::decode(const FiniteField* F, std::uint64_t code) {
  std::vector<fe> v;
  while (code) {
    v.push_back(static_cast<fe>(code % F->size()));
    code /= F->size();
  }
  return Poly(F, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  const FiniteField* F = F_ ? F_ : o.F_;
  std::vector<fe> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F->add((*this)[static_cast<int>(i)], o[static_cast<int>(i)]);
  return Poly(F, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<fe> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->neg(c_[i]);
  return Poly(F_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  const FiniteField* F = F_ ? F_ : o.F_;
  if (c_.empty() || o.c_.empty()) return Poly(F);
  std::vector<fe> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = F->add(r[i + j], F->mul(c_[i], o.c_[j]));
  }
  return Poly(F, std::move(r));
}

Poly Poly::scale(fe c) const {
  std::vector<fe> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->mul(c_[i], c);
  return Poly(F_, std::move(r));
}

Poly Poly::shift(int n) const {
  if (c_.empty()) return *this;
  std::vector<fe> r(n, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(F_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  const FiniteField* F = d.F_;
  if (deg() < d.deg()) return {Poly(F), *this};
  std::vector<fe> r = c_;
  std::vector<fe> qt(c_.size() - d.c_.size() + 1, 0);
  fe li = F->inv(d.lead());
  for (std::size_t k = r.size(); k-- >= d.c_.size();) {
    fe c = F->mul(r[k], li);
    std::size_t s = k - (d.c_.size() - 1);
    qt[s] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < d.c_.size(); ++i) r[s + i] = F->sub(r[s + i], F->mul(c, d.c_[i]));
    if (k == 0) break;
  }
  r.resize(d.c_.size() - 1);
  return {Poly(F, std::move(qt)), Poly(F, std::move(r))};
}

int Poly::valuation(const Poly& d) const {
  if (is_zero()) throw DomainError("valuation of zero polynomial");
  if (d.deg() < 1) throw DomainError("valuation at a constant");
  int k = 0;
  Poly f = *this;
  while (true) {
    auto [qt, r] = f.divmod(d);
    if (!r.is_zero()) return k;
    f = qt;
    ++k;
  }
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(F_->inv(lead()));
}

Poly Poly::pow(std::uint64_t n) const {
  Poly r = constant(F_, 1), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Poly Poly::powmod(std::uint64_t n, const Poly& m) const {
  Poly r = constant(F_, 1) % m, b = *this % m;
  while (n) {
    if (n & 1) r = (r * b) % m;
    n >>= 1;
    if (n) b = (b * b) % m;
  }
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(F_);
  std::vector<fe> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = F_->mul(c_[i], F_->from_int(static_cast<std::int64_t>(i)));
  return Poly(F_, std::move(r));
}

Poly Poly::compose(const Poly& inner) const {
  Poly r(inner.F_ ? inner.F_ : F_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * inner + constant(F_, c_[i]);
  return r;
}

fe Poly::eval(fe x) const {
  fe r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
  return r;
}

fe Poly::eval_in(const FiniteField* G, fe x) const {
  fe r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = G->add(G->mul(r, x), c_[i]);
  return r;
}

Poly Poly::frobenius() const {
  if (c_.empty()) return *this;
  const std::size_t q = F_->size();
  std::vector<fe> r((c_.size() - 1) * q + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * q] = c_[i];
  return Poly(F_, std::move(r));
}

bool Poly::operator<(const Poly& o) const {
  if (deg() != o.deg()) return deg() < o.deg();
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::uint64_t Poly::encode() const {
  unsigned __int128 code = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    code = code * F_->size() + c_[i];
    if (code >> 64) throw ParameterError("polynomial too large to encode");
  }
  return static_cast<std::uint64_t>(code);
}

std::string Poly::str(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    // Element indices: residues for prime fields, reparseable for all q.
    std::string c = std::to_string(c_[i]);
    std::string term;
    if (i == 0) {
      term = c;
    } else {
      std::string x(1, var);
      if (i > 1) x += "^" + std::to_string(i);
      term = (c_[i] == 1 ? "" : c + "*") + x;
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  const FiniteField* F = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b, s0 = Poly::constant(F, 1), s1(F), t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [qt, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s = s0 - qt * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    Poly t = t0 - qt * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  fe li = F->inv(r0.lead());
  return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

bool is_irreducible(const Poly& f) {
  if (f.deg() < 1) return false;
  if (f.deg() == 1) return true;
  const FiniteField* F = f.field();
  Poly X = Poly::var(F);
  Poly h = X;
  for (int i = 1; 2 * i <= f.deg(); ++i) {
    h = h.powmod(F->size(), f);
    if (gcd(f, h - X).deg() != 0) return false;
  }
  return true;
}

int integer_mobius(std::uint64_t n) {
  int m = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

std::uint64_t irreducible_count(std::uint64_t q, int d) {
  __int128 total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    __int128 pw = 1;
    for (int i = 0; i < d / e; ++i) pw *= q;
    total += integer_mobius(static_cast<std::uint64_t>(e)) * pw;
  }
  return static_cast<std::uint64_t>(total / d);
}

std::vector<Poly> irreducible_polys(const FiniteField* F, int d) {
  if (d < 1 || d > 12) throw ParameterError("irreducible_polys: degree out of range 1..12");
  const std::uint64_t q = F->size();
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  if (count > (std::uint64_t{1} << 26)) throw ParameterError("irreducible_polys: search space too large");
  std::vector<Poly> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<fe> c(d + 1, 0);
    std::uint64_t x = code;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<fe>(x % q);
      x /= q;
    }
    c[d] = 1;
    if (d > 1 && c[0] == 0) continue;
    Poly f(F, std::move(c));
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  if (out.size() != irreducible_count(q, d)) throw ConsistencyError("irreducible count mismatch");
  return out;
}

namespace {

Poly pth_root(const Poly& f) {
  const FiniteField* F = f.field();
  const std::uint32_t p = F->p();
  std::uint64_t e = F->size() / p;  // a^(q/p) is the p-th root
  std::vector<fe> r(f.deg() / p + 1, 0);
  for (int i = 0; i <= f.deg(); i += static_cast<int>(p)) r[i / p] = F->pow(f[i], static_cast<std::int64_t>(e));
  return Poly(F, std::move(r));
}

void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.deg() < 1) return;
  const FiniteField* F = f.field();
  Poly g = f.derivative();
  if (g.is_zero()) {
    squarefree(pth_root(f), mult * static_cast<int>(F->p()), out);
    return;
  }
  Poly c = gcd(f, g);
  Poly w = f / c;
  int i = 1;
  while (w.deg() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.deg() > 0) out.push_back({z.monic(), i * mult});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.deg() > 0) squarefree(pth_root(c.monic()), mult * static_cast<int>(F->p()), out);
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.deg() == d) {
    out.push_back(g.monic());
    return;
  }
  const FiniteField* F = g.field();
  const std::uint64_t q = F->size();
  while (true) {
    std::vector<fe> c(g.deg());
    for (auto& x : c) x = static_cast<fe>(rng() % q);
    Poly a(F, c);
    if (a.deg() < 1) continue;
    Poly b(F);
    if (F->p() == 2) {
      // absolute trace to F_2 of F_{q^d}: a + a^2 + ... + a^{2^{m-1}}
      unsigned m = F->abs_degree() * static_cast<unsigned>(d);
      Poly t = a;
      b = a;
      for (unsigned i = 1; i < m; ++i) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      // a^{(q^d-1)/2} = (prod_{i<d} a^{q^i})^{(q-1)/2}
      Poly n = Poly::constant(F, 1), t = a;
      for (int i = 0; i < d; ++i) {
        n = (n * t) % g;
        t = t.powmod(q, g);
      }
      b = n.powmod((q - 1) / 2, g) - Poly::constant(F, 1);
    }
    Poly h = gcd(g, b);
    if (h.deg() > 0 && h.deg() < g.deg()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  if (f.is_zero()) throw DomainError("factor of zero polynomial");
  std::vector<std::pair<Poly, int>> sqf, out;
  squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed);
  const FiniteField* F = f.field();
  for (auto& [g0, m] : sqf) {
    Poly g = g0;
    Poly X = Poly::var(F);
    Poly h = X;
    for (int i = 1; 2 * i <= g.deg(); ++i) {
      h = h.powmod(F->size(), g);
      Poly d = gcd(g, h - X);
      if (d.deg() > 0) {
        std::vector<Poly> parts;
        equal_degree(d, i, rng, parts);
        for (auto& pp : parts) out.push_back({pp, m});
        g = g / d;
        h = h % g;
      }
    }
    if (g.deg() > 0) out.push_back({g.monic(), m});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Poly, int>> merged;
  for (auto& pr : out) {
    if (!merged.empty() && merged.back().first == pr.first)
      merged.back().second += pr.second;
    else
      merged.push_back(pr);
  }
  return merged;
}

}  // namespace cusp
