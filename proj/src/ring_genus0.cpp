#include <algorithm>

#include "cusp/errors.hpp"
#include "cusp/ring.hpp"

namespace cusp {

namespace {

// F_q[T] (no g) or the ring of functions on P^1 regular away from the place g.
class Genus0Ring final : public Ring {
 public:
  Genus0Ring(const FiniteField* F, Poly g)
      : Ring(g.is_zero() ? Family::Polynomial : Family::Shifted, F, g.is_zero() ? 1 : g.deg()), g_(std::move(g)) {}

  std::string spec() const override {
    if (fam_ == Family::Polynomial) return "poly q=" + std::to_string(q());
    return "shifted q=" + std::to_string(q()) + " g=" + g_.str();
  }

  Poly infinity_poly() const override { return shifted() ? g_ : Poly(F_); }

  std::vector<PlaceKey> places_of_degree(int d) const override {
    std::vector<PlaceKey> out;
    if (d < 1) return out;
    if (d > 12) throw ParameterError("place degree above 12 is not supported in genus 0");
    for (auto& f : irreducible_polys(F_, d)) {
      if (shifted() && f == g_) continue;
      out.push_back(PlaceKey{d, f.encode(), 0});
    }
    if (shifted() && d == 1) out.push_back(PlaceKey{1, kClassicalInfinity, 0});
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string place_name(const PlaceKey& p) const override {
    if (p.a == kClassicalInfinity) return "inf0";
    return "(" + Poly::decode(F_, p.a).str() + ")";
  }

  PlaceKey parse_place(const std::string& s) const override {
    if (s == "inf0") {
      if (!shifted()) throw ParameterError("inf0 is a place only of shifted rings");
      return PlaceKey{1, kClassicalInfinity, 0};
    }
    std::string body = s;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    Poly f = Poly::parse(F_, body, 'T');
    if (f.deg() < 1 || !f.is_monic() || !is_irreducible(f))
      throw ParameterError("place '" + s + "' is not a monic irreducible polynomial");
    if (shifted() && f == g_) throw ParameterError("g is the place at infinity, not a place of A");
    return PlaceKey{f.deg(), f.encode(), 0};
  }

  std::int64_t pic_order() const override { return dinf_; }
  int pic_add(int a, int b) const override { return (a + b) % dinf_; }
  int pic_neg(int a) const override { return (dinf_ - a) % dinf_; }
  std::string pic_str(int c) const override { return shifted() ? "deg=" + std::to_string(c) + " mod " + std::to_string(dinf_) : "1"; }
  int place_class(const PlaceKey& p) const override { return p.deg % dinf_; }

  std::int64_t elem_degree(const Elem& x) const override {
    if (x.is_zero()) return kMinusInfinity;
    if (!shifted()) return x.u.deg() - x.d.deg();
    return static_cast<std::int64_t>(dinf_) * (vg(x.d) - vg(x.u));
  }

  std::int64_t valuation(const Elem& x, const PlaceKey& p) const override {
    if (x.is_zero()) return std::numeric_limits<std::int64_t>::max();
    if (p.a == kClassicalInfinity) return x.d.deg() - x.u.deg();
    Poly pi = Poly::decode(F_, p.a);
    return x.u.valuation(pi) - x.d.valuation(pi);
  }

  Ideal divisor(const Elem& x) const override {
    if (x.is_zero()) throw DomainError("divisor of zero");
    Ideal out;
    for (auto& [f, e] : factor(x.u))
      if (!(shifted() && f == g_)) out[PlaceKey{f.deg(), f.encode(), 0}] += e;
    for (auto& [f, e] : factor(x.d))
      if (!(shifted() && f == g_)) out[PlaceKey{f.deg(), f.encode(), 0}] -= e;
    if (shifted() && x.d.deg() != x.u.deg()) out[PlaceKey{1, kClassicalInfinity, 0}] = x.d.deg() - x.u.deg();
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

  std::int64_t riemann_roch(const Ideal& a, std::int64_t m) const override {
    return std::max<std::int64_t>(0, degree(a) + m * dinf_ + 1);
  }

  IdealSpace ideal_space(const Ideal& a, std::int64_t N) const override {
    Poly gp = Poly::constant(F_, 1), gm = Poly::constant(F_, 1);
    for (auto& [p, e] : a) {
      if (p.a == kClassicalInfinity) continue;
      Poly pi = Poly::decode(F_, p.a);
      if (e > 0)
        gp *= pi.pow(static_cast<std::uint64_t>(e));
      else
        gm *= pi.pow(static_cast<std::uint64_t>(-e));
    }
    IdealSpace s;
    std::int64_t top;
    Poly extra = Poly::constant(F_, 1);
    if (!shifted()) {
      s.den = gm;
      top = N - degree(a);
    } else {
      // x = T^i G+ / (G- g^k), k = floor(N / d).
      std::int64_t k = N >= 0 ? N / dinf_ : -((-N + dinf_ - 1) / dinf_);
      if (k >= 0) {
        s.den = gm * g_.pow(static_cast<std::uint64_t>(k));
      } else {
        s.den = gm;
        extra = g_.pow(static_cast<std::uint64_t>(-k));
      }
      top = k * dinf_ - degree(a);
    }
    for (std::int64_t i = 0; i <= top; ++i)
      s.nums.push_back({(gp * extra).shift(static_cast<int>(i)), Poly(F_)});
    if (s.dim() != ideal_space_dim(a, N)) throw ConsistencyError("ideal space dimension disagrees with Riemann-Roch");
    return s;
  }

 protected:
  std::vector<PlaceKey> pole_candidates(const Elem& x) const override {
    std::vector<PlaceKey> out;
    for (auto& [f, e] : factor(x.d))
      if (!(shifted() && f == g_)) out.push_back(PlaceKey{f.deg(), f.encode(), 0});
    if (shifted()) out.push_back(PlaceKey{1, kClassicalInfinity, 0});
    return out;
  }

 private:
  bool shifted() const { return fam_ == Family::Shifted; }
  std::int64_t vg(const Poly& f) const { return f.valuation(g_); }
  Poly g_;
};

}  // namespace

RingPtr Ring::polynomial(std::uint64_t q) {
  if (!FiniteField::prime_power(q)) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  const FiniteField* F = FiniteField::get(q);
  return std::make_shared<Genus0Ring>(F, Poly(F));
}

RingPtr Ring::shifted(std::uint64_t q, const std::string& g) {
  if (!FiniteField::prime_power(q)) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  const FiniteField* F = FiniteField::get(q);
  Poly gp = Poly::parse(F, g, 'T');
  if (gp.deg() < 1 || !gp.is_monic() || !is_irreducible(gp)) throw ParameterError("g must be monic irreducible");
  if (gp[0] == 0) throw ParameterError("g must satisfy g(0) != 0");
  return std::make_shared<Genus0Ring>(F, gp);
}

}  // namespace cusp
