#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cusp/errors.hpp"
#include "cusp/field.hpp"
#include "cusp/poly.hpp"
#include "cusp/rational.hpp"

namespace cusp {

// Coefficient domains. Each provides zero/one/add/sub/neg/mul/inv/is_zero/eq/str.
struct RatDomain {
  using value_type = Rat;
  Rat zero() const { return 0; }
  Rat one() const { return 1; }
  Rat add(const Rat& a, const Rat& b) const { return a + b; }
  Rat sub(const Rat& a, const Rat& b) const { return a - b; }
  Rat neg(const Rat& a) const { return -a; }
  Rat mul(const Rat& a, const Rat& b) const { return a * b; }
  Rat inv(const Rat& a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return Rat(1) / a;
  }
  bool is_zero(const Rat& a) const { return a == 0; }
  bool eq(const Rat& a, const Rat& b) const { return a == b; }
  std::string str(const Rat& a) const { return a.str(); }
};

struct FqDomain {
  using value_type = fe;
  const FiniteField* F;
  fe zero() const { return 0; }
  fe one() const { return 1; }
  fe add(fe a, fe b) const { return F->add(a, b); }
  fe sub(fe a, fe b) const { return F->sub(a, b); }
  fe neg(fe a) const { return F->neg(a); }
  fe mul(fe a, fe b) const { return F->mul(a, b); }
  fe inv(fe a) const { return F->inv(a); }
  bool is_zero(fe a) const { return a == 0; }
  bool eq(fe a, fe b) const { return a == b; }
  std::string str(fe a) const { return F->str(a); }
};

// F_q[T]; only nonzero constants are units.
struct PolyDomain {
  using value_type = Poly;
  const FiniteField* F;
  Poly zero() const { return Poly(F); }
  Poly one() const { return Poly::constant(F, 1); }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly neg(const Poly& a) const { return -a; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly inv(const Poly& a) const {
    if (a.deg() != 0) throw DomainError("non-unit in F_q[T]");
    return Poly::constant(F, F->inv(a[0]));
  }
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  bool eq(const Poly& a, const Poly& b) const { return a == b; }
  std::string str(const Poly& a) const { return a.str(); }
};

inline constexpr std::int64_t kExactPrec = std::int64_t{1} << 60;

inline std::int64_t prec_add(std::int64_t a, std::int64_t b) {
  if (a >= kExactPrec || b >= kExactPrec) return kExactPrec;
  return std::min(a + b, kExactPrec);
}

// Truncated Laurent series  sum_{e < prec} c_e x^e + O(x^prec).
// Coefficients are stored from the lowest nonzero exponent; trailing known
// zeros are dropped, so the stored length never determines precision.
template <class D>
class Series {
 public:
  using T = typename D::value_type;

  Series() : d_(), val_(0), prec_(0) {}
  Series(D dom, std::string var, std::int64_t prec) : d_(std::move(dom)), var_(std::move(var)), val_(prec), prec_(prec) {}
  Series(D dom, std::string var, std::int64_t val, std::vector<T> c, std::int64_t prec)
      : d_(std::move(dom)), var_(std::move(var)), val_(val), c_(std::move(c)), prec_(prec) {
    if (val_ + static_cast<std::int64_t>(c_.size()) > prec_) c_.resize(static_cast<std::size_t>(std::max<std::int64_t>(prec_ - val_, 0)), d_.zero());
    normalize();
  }
  static Series exact(D dom, std::string var, std::int64_t val, std::vector<T> c) {
    return Series(std::move(dom), std::move(var), val, std::move(c), kExactPrec);
  }
  static Series constant(D dom, std::string var, const T& c, std::int64_t prec = kExactPrec) {
    return Series(std::move(dom), std::move(var), 0, {c}, prec);
  }
  static Series monomial(D dom, std::string var, const T& c, std::int64_t e, std::int64_t prec = kExactPrec) {
    return Series(std::move(dom), std::move(var), e, {c}, prec);
  }

  const D& domain() const { return d_; }
  const std::string& var() const { return var_; }
  std::int64_t prec() const { return prec_; }
  bool is_exact() const { return prec_ >= kExactPrec; }
  // No nonzero coefficient below the precision.
  bool is_zero() const { return c_.empty(); }
  // Exponent of the first nonzero coefficient; the precision if none is known.
  std::int64_t val() const { return c_.empty() ? prec_ : val_; }
  std::int64_t rel_prec() const { return prec_ - val(); }
  T operator[](std::int64_t e) const {
    if (e >= prec_) throw PrecisionError("coefficient beyond series precision");
    if (c_.empty() || e < val_ || e >= val_ + static_cast<std::int64_t>(c_.size())) return d_.zero();
    return c_[static_cast<std::size_t>(e - val_)];
  }
  const T& lead() const {
    if (c_.empty()) throw PrecisionError("series has no known nonzero coefficient");
    return c_.front();
  }
  // Nonzero known terms, ascending.
  std::vector<std::pair<std::int64_t, T>> terms() const {
    std::vector<std::pair<std::int64_t, T>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!d_.is_zero(c_[i])) out.push_back({val_ + static_cast<std::int64_t>(i), c_[i]});
    return out;
  }

  Series truncate(std::int64_t p) const {
    if (p >= prec_) return *this;
    Series r = *this;
    r.prec_ = p;
    if (!r.c_.empty()) {
      std::int64_t keep = std::max<std::int64_t>(p - r.val_, 0);
      if (keep < static_cast<std::int64_t>(r.c_.size())) r.c_.resize(static_cast<std::size_t>(keep));
    }
    r.normalize();
    return r;
  }

  // Keeps only exponents > i (precision unchanged).
  Series cut(std::int64_t i) const {
    std::vector<T> c;
    std::int64_t start = std::max(i + 1, val());
    for (std::int64_t e = start; e < val_ + static_cast<std::int64_t>(c_.size()); ++e) c.push_back((*this)[e]);
    return Series(d_, var_, start, std::move(c), prec_);
  }

  Series operator+(const Series& o) const { return combine(o, false); }
  Series operator-(const Series& o) const { return combine(o, true); }
  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = d_.neg(x);
    return r;
  }
  Series scale(const T& a) const {
    if (d_.is_zero(a)) return Series(d_, var_, prec_);
    Series r = *this;
    for (auto& x : r.c_) x = d_.mul(x, a);
    r.normalize();
    return r;
  }
  // times var^k
  Series shift(std::int64_t k) const {
    Series r = *this;
    r.val_ += k;
    r.prec_ = prec_add(prec_, k);
    return r;
  }
  // var -> var^k (k >= 1)
  Series stretch(std::int64_t k) const {
    if (k < 1) throw ParameterError("stretch factor must be positive");
    std::vector<T> c;
    if (!c_.empty()) {
      c.assign((c_.size() - 1) * k + 1, d_.zero());
      for (std::size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
    }
    std::int64_t p = is_exact() ? kExactPrec : prec_ * k;
    return Series(d_, var_, val_ * k, std::move(c), p);
  }
  template <class F>
  Series map(F f) const {
    Series r = *this;
    for (auto& x : r.c_) x = f(x);
    r.normalize();
    return r;
  }

  Series operator*(const Series& o) const {
    std::int64_t p = std::min(prec_add(prec_, o.val()), prec_add(o.prec_, val()));
    if (c_.empty() || o.c_.empty()) return Series(d_, var_, p);
    std::int64_t v = val_ + o.val_;
    std::int64_t len = static_cast<std::int64_t>(c_.size() + o.c_.size() - 1);
    if (p < kExactPrec) len = std::min(len, p - v);
    if (len <= 0) return Series(d_, var_, p);
    std::vector<T> c(static_cast<std::size_t>(len), d_.zero());
    for (std::size_t i = 0; i < c_.size() && static_cast<std::int64_t>(i) < len; ++i) {
      if (d_.is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size() && static_cast<std::int64_t>(i + j) < len; ++j)
        c[i + j] = d_.add(c[i + j], d_.mul(c_[i], o.c_[j]));
    }
    return Series(d_, var_, v, std::move(c), p);
  }
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  // Inverse keeping the relative precision of *this; exact inputs need inv(rel).
  Series inv() const {
    if (is_exact()) throw PrecisionError("inverse of an exact series needs an explicit precision");
    return inv(rel_prec());
  }
  Series inv(std::int64_t rel) const {
    if (c_.empty()) throw PrecisionError("cannot invert: no nonzero coefficient within precision");
    if (!is_exact()) rel = std::min(rel, rel_prec());
    T u = d_.inv(c_.front());  // throws for non-units
    std::vector<T> b(static_cast<std::size_t>(std::max<std::int64_t>(rel, 0)), d_.zero());
    for (std::int64_t n = 0; n < rel; ++n) {
      T acc = n == 0 ? d_.one() : d_.zero();
      for (std::int64_t k = 1; k <= n && k < static_cast<std::int64_t>(c_.size()); ++k)
        acc = d_.sub(acc, d_.mul(c_[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(n - k)]));
      b[static_cast<std::size_t>(n)] = d_.mul(acc, u);
    }
    return Series(d_, var_, -val_, std::move(b), -val_ + rel);
  }

  Series pow(std::int64_t n) const {
    if (n < 0) return inv().pow(-n);
    Series r = constant(d_, var_, d_.one()), b = *this;
    while (n) {
      if (n & 1) r = r * b;
      n >>= 1;
      if (n) b = b * b;
    }
    return r;
  }

  // f(g) for g with positive valuation.
  Series compose(const Series& g) const {
    if (g.is_zero()) throw PrecisionError("composition with a series of unknown valuation");
    std::int64_t vg = g.val();
    if (vg < 1) throw DomainError("composition needs an inner series of positive valuation");
    Series acc(g.d_, g.var_, kExactPrec);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(g.d_, g.var_, c_[i]);
    if (!c_.empty()) {
      if (val_ >= 0)
        acc = acc * g.pow(val_);
      else
        acc = acc * g.inv().pow(-val_);
    }
    if (!is_exact()) {
      std::int64_t cap = prec_ * vg;
      acc = acc.truncate(cap);
      if (c_.empty()) return Series(g.d_, g.var_, cap);
    }
    return acc;
  }

  // Agreement on all exponents below both precisions.
  bool agrees(const Series& o) const {
    std::int64_t p = std::min(prec_, o.prec_);
    std::int64_t lo = std::min(val(), o.val());
    for (std::int64_t e = lo; e < p; ++e)
      if (!d_.eq((*this)[e], o[e])) return false;
    return true;
  }

  std::string str(int max_terms = 12) const {
    std::string out;
    int n = 0;
    for (auto& [e, c] : terms()) {
      if (n++ == max_terms) {
        out += " + ...";
        break;
      }
      if (!out.empty()) out += " + ";
      out += "(" + d_.str(c) + ")*" + var_ + "^" + std::to_string(e);
    }
    if (out.empty()) out = "0";
    if (!is_exact()) out += " + O(" + var_ + "^" + std::to_string(prec_) + ")";
    return out;
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && d_.is_zero(c_[lead])) ++lead;
    if (lead) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      val_ += static_cast<std::int64_t>(lead);
    }
    while (!c_.empty() && d_.is_zero(c_.back())) c_.pop_back();
    if (c_.empty()) val_ = prec_;
  }

  Series combine(const Series& o, bool subtract) const {
    std::int64_t p = std::min(prec_, o.prec_);
    std::int64_t lo = std::min(val(), o.val());
    std::int64_t hi = std::max(c_.empty() ? lo : val_ + static_cast<std::int64_t>(c_.size()),
                               o.c_.empty() ? lo : o.val_ + static_cast<std::int64_t>(o.c_.size()));
    hi = std::min(hi, p);
    std::vector<T> c;
    for (std::int64_t e = lo; e < hi; ++e) {
      T a = in_range(e) ? (*this)[e] : d_.zero();
      T b = o.in_range(e) ? o[e] : d_.zero();
      c.push_back(subtract ? d_.sub(a, b) : d_.add(a, b));
    }
    return Series(d_, var_, lo, std::move(c), p);
  }
  bool in_range(std::int64_t e) const { return e < prec_; }

  D d_;
  std::string var_;
  std::int64_t val_;
  std::vector<T> c_;
  std::int64_t prec_;
};

}  // namespace cusp
