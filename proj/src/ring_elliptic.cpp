#include <algorithm>
#include <set>

#include "cusp/elliptic.hpp"
#include "cusp/errors.hpp"
#include "cusp/ring.hpp"
#include "cusp/series.hpp"

namespace cusp {

namespace {

using FqSeries = Series<FqDomain>;

struct PlaceData {
  int deg = 0;
  const FiniteField* K = nullptr;  // canonical field of degree deg
  fe x0 = 0, y0 = 0;               // least point of the orbit
  Poly pi;                         // minimal polynomial of x0 over F_q
  bool ramified = false;           // W_y(x0, y0) = 0: x - x0 has valuation 2
};

struct Local {
  std::int64_t prec = 0;
  FqSeries X, Y;
};

class EllipticRing final : public Ring {
 public:
  EllipticRing(const FiniteField* F, const std::vector<std::int64_t>& a)
      : Ring(Family::Elliptic, F, 1), curve_(F, a), araw_(a) {
    b_ = Poly(F, {curve_.a3, curve_.a1});
    c_ = Poly(F, {curve_.a6, curve_.a4, curve_.a2, 1});
    points_ = curve_.rational_points();
    for (std::size_t i = 0; i < points_.size(); ++i) index_[points_[i]] = static_cast<int>(i);
  }

  std::string spec() const override {
    std::string s = "elliptic q=" + std::to_string(q()) + " a=[";
    for (std::size_t i = 0; i < araw_.size(); ++i) s += (i ? "," : "") + std::to_string(araw_[i]);
    return s + "]";
  }

  std::vector<PlaceKey> places_of_degree(int d) const override {
    if (d < 1) return {};
    if (d > 8) throw ParameterError("elliptic place degree above 8 is not supported");
    std::vector<PlaceKey> out;
    for (auto& pi : irreducible_polys(F_, d))
      for (auto& k : places_over(pi))
        if (k.deg == d) out.push_back(k);
    if (d % 2 == 0)
      for (auto& pi : irreducible_polys(F_, d / 2))
        for (auto& k : places_over(pi))
          if (k.deg == d) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string place_name(const PlaceKey& p) const override {
    std::string c = "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
    return p.deg == 1 ? "P" + c : "P" + std::to_string(p.deg) + c;
  }

  PlaceKey parse_place(const std::string& s) const override {
    // P(i,j) or P<d>(i,j) with field element indices in the canonical degree-d field.
    if (s.size() < 6 || s[0] != 'P' || s.back() != ')') throw ParameterError("bad elliptic place '" + s + "'");
    auto open = s.find('(');
    if (open == std::string::npos) throw ParameterError("bad elliptic place '" + s + "'");
    int d = 1;
    std::uint64_t i = 0, j = 0;
    try {
      if (open > 1) d = std::stoi(s.substr(1, open - 1));
      auto comma = s.find(',', open);
      if (comma == std::string::npos) throw 0;
      i = std::stoull(s.substr(open + 1, comma - open - 1));
      j = std::stoull(s.substr(comma + 1, s.size() - comma - 2));
    } catch (...) {
      throw ParameterError("bad elliptic place '" + s + "'");
    }
    if (d < 1 || d > 8) throw ParameterError("elliptic place degree out of range in '" + s + "'");
    const FiniteField* K = canonical_field(d);
    if (i >= K->size() || j >= K->size() || !curve_.on_curve(K, static_cast<fe>(i), static_cast<fe>(j)))
      throw ParameterError("'" + s + "' is not a point on the curve");
    PlaceKey k = register_point(d, K, static_cast<fe>(i), static_cast<fe>(j));
    if (k.deg != d || k.a != i || k.b != j)
      throw ParameterError("'" + s + "' is not the canonical name of its place; use " + place_name(k));
    return k;
  }

  std::int64_t pic_order() const override { return static_cast<std::int64_t>(points_.size()); }
  int pic_add(int a, int b) const override {
    return index_.at(curve_.add(F_, points_[static_cast<std::size_t>(a)], points_[static_cast<std::size_t>(b)]));
  }
  int pic_neg(int a) const override { return index_.at(curve_.neg(F_, points_[static_cast<std::size_t>(a)])); }
  std::string pic_str(int c) const override {
    const Point& P = points_[static_cast<std::size_t>(c)];
    if (P.inf) return "O";
    return "(" + std::to_string(P.x) + "," + std::to_string(P.y) + ")";
  }
  int place_class(const PlaceKey& p) const override {
    const PlaceData& D = data(p);
    // Frobenius trace of the point, which lies in E(F_q).
    Point acc = Point::infinity(), P{false, D.x0, D.y0};
    for (int i = 0; i < D.deg; ++i) {
      acc = curve_.add(D.K, acc, P);
      P = Point{false, D.K->pow(P.x, static_cast<std::int64_t>(q())), D.K->pow(P.y, static_cast<std::int64_t>(q()))};
    }
    if (!acc.inf && (acc.x >= q() || acc.y >= q())) throw ConsistencyError("Frobenius trace is not F_q-rational");
    return index_.at(acc);
  }

  std::int64_t elem_degree(const Elem& x) const override {
    if (x.is_zero()) return kMinusInfinity;
    std::int64_t top = std::max<std::int64_t>(x.u.is_zero() ? kMinusInfinity / 4 : 2 * x.u.deg(),
                                              x.v.is_zero() ? kMinusInfinity / 4 : 3 + 2 * x.v.deg());
    return top - 2 * x.d.deg();
  }

  std::int64_t valuation(const Elem& x, const PlaceKey& p) const override {
    if (x.is_zero()) return std::numeric_limits<std::int64_t>::max();
    const PlaceData& D = data(p);
    const std::int64_t e = D.ramified ? 2 : 1;
    return numerator_valuation(x, p, D) - e * x.d.valuation(D.pi);
  }

  Ideal divisor(const Elem& x) const override {
    if (x.is_zero()) throw DomainError("divisor of zero");
    std::set<Poly> primes;
    for (auto& [f, e] : factor(norm_numerator(x))) primes.insert(f);
    for (auto& [f, e] : factor(x.d)) primes.insert(f);
    Ideal out;
    for (auto& pi : primes)
      for (auto& k : places_over(pi)) {
        std::int64_t v = valuation(x, k);
        if (v) out[k] = v;
      }
    return out;
  }

  std::int64_t riemann_roch(const Ideal& a, std::int64_t m) const override {
    std::int64_t d = degree(a) + m;
    if (d >= 1) return d;
    if (d == 0) return pic_class(a) == 0 ? 1 : 0;
    return 0;
  }

  IdealSpace ideal_space(const Ideal& a, std::int64_t N) const override {
    IdealSpace s;
    s.den = Poly::constant(F_, 1);
    for (auto& [p, e] : a)
      if (e < 0) s.den *= data(p).pi.pow(static_cast<std::uint64_t>(-e));
    const std::int64_t M = N + 2 * s.den.deg();
    const std::int64_t expect = ideal_space_dim(a, N);
    if (M < 0) {
      if (expect != 0) throw ConsistencyError("ideal space dimension disagrees with Riemann-Roch");
      return s;
    }
    // Monomials of A with pole order <= M: x^i (2i <= M), x^i y (2i + 3 <= M).
    struct Mono {
      int i;
      bool y;
    };
    std::vector<Mono> monos;
    for (int i = 0; 2 * i <= M; ++i) monos.push_back({i, false});
    for (int i = 0; 2 * i + 3 <= M; ++i) monos.push_back({i, true});
    // Conditions v_Q(F) >= a_Q + v_Q(den) at every place where that bound is positive.
    std::map<PlaceKey, std::int64_t> need;
    for (auto& [p, e] : a) need[p] = e;
    for (auto& [f, e] : factor(s.den))
      for (auto& k : places_over(f)) need.try_emplace(k, 0);
    FqMat rows;
    for (auto& [p, ap] : need) {
      const PlaceData& D = data(p);
      std::int64_t c = ap + (D.ramified ? 2 : 1) * s.den.valuation(D.pi);
      if (c < 0) throw ConsistencyError("negative local bound in ideal space");
      if (c == 0) continue;
      Local L = local(p, c);
      std::vector<FqSeries> ser;
      FqSeries xp = FqSeries::constant(FqDomain{D.K}, "s", 1, c);
      std::vector<FqSeries> xpow;
      for (int i = 0; 2 * i <= M; ++i) {
        xpow.push_back(xp);
        xp = xp * L.X;
      }
      for (auto& m : monos) ser.push_back(m.y ? xpow[static_cast<std::size_t>(m.i)] * L.Y : xpow[static_cast<std::size_t>(m.i)]);
      for (std::int64_t j = 0; j < c; ++j) {
        const int nd = D.deg;
        std::vector<FqVec> digit_rows(static_cast<std::size_t>(nd), FqVec(monos.size(), 0));
        for (std::size_t k = 0; k < monos.size(); ++k) {
          fe v = ser[k][j];
          if (nd == 1) {
            digit_rows[0][k] = v;
          } else {
            auto dg = D.K->digits(v);
            for (int t = 0; t < nd; ++t) digit_rows[static_cast<std::size_t>(t)][k] = t < static_cast<int>(dg.size()) ? dg[static_cast<std::size_t>(t)] : 0;
          }
        }
        for (auto& r : digit_rows) rows.push_back(std::move(r));
      }
    }
    FqMat basis = nullspace(F_, rows, static_cast<int>(monos.size()));
    for (auto& vec : basis) {
      Poly U(F_), V(F_);
      for (std::size_t k = 0; k < monos.size(); ++k) {
        if (!vec[k]) continue;
        Poly m = Poly::monomial(F_, vec[k], monos[k].i);
        if (monos[k].y)
          V += m;
        else
          U += m;
      }
      s.nums.push_back({U, V});
    }
    if (s.dim() != expect) throw ConsistencyError("ideal space dimension disagrees with Riemann-Roch");
    return s;
  }

 protected:
  std::vector<PlaceKey> pole_candidates(const Elem& x) const override {
    std::vector<PlaceKey> out;
    for (auto& [f, e] : factor(x.d))
      for (auto& k : places_over(f)) out.push_back(k);
    return out;
  }

 private:
  const FiniteField* canonical_field(int d) const {
    if (d == 1) return F_;
    std::lock_guard<std::mutex> lk(mu_);
    auto it = fields_.find(d);
    if (it != fields_.end()) return it->second;
    std::uint64_t qd = 1;
    for (int i = 0; i < d; ++i) qd *= q();
    if (qd > (1u << 23)) throw ParameterError("extension field too large");
    // Least monic irreducible of degree d: encode() is monotone in the canonical order.
    for (std::uint64_t code = qd;; ++code) {
      Poly h = Poly::decode(F_, code);
      if (is_irreducible(h)) {
        const FiniteField* K = FiniteField::extension(F_, h.coeffs());
        fields_[d] = K;
        return K;
      }
    }
  }

  // Registers the place through (x0, y0) over the canonical field K of degree d.
  PlaceKey register_point(int d, const FiniteField* K, fe x0, fe y0) const {
    const std::int64_t qq = static_cast<std::int64_t>(q());
    std::vector<std::pair<fe, fe>> orbit;
    fe x = x0, y = y0;
    do {
      orbit.push_back({x, y});
      x = K->pow(x, qq);
      y = K->pow(y, qq);
    } while (!(x == x0 && y == y0));
    const int deg = static_cast<int>(orbit.size());
    if (d % deg != 0) throw ConsistencyError("orbit size does not divide field degree");
    if (deg != d) {
      // The point is defined over a smaller field; express it there.
      throw ParameterError("point is defined over a proper subfield");
    }
    auto mn = *std::min_element(orbit.begin(), orbit.end());
    PlaceKey key{deg, mn.first, mn.second};
    std::lock_guard<std::mutex> lk(mu_);
    if (places_.count(key)) return key;
    PlaceData D;
    D.deg = deg;
    D.K = K;
    D.x0 = mn.first;
    D.y0 = mn.second;
    // Minimal polynomial of x0: product over its distinct conjugates.
    std::set<fe> conj;
    for (auto& pt : orbit) conj.insert(pt.first);
    Poly m = Poly::constant(K, 1);
    for (fe c : conj) m *= Poly(K, {K->neg(c), 1});
    for (fe c : m.coeffs())
      if (c >= q()) throw ConsistencyError("minimal polynomial not over F_q");
    D.pi = Poly(F_, m.coeffs());
    D.ramified = curve_.wy(K, D.x0, D.y0) == 0;
    places_.emplace(key, D);
    return key;
  }

  const PlaceData& data(const PlaceKey& p) const {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = places_.find(p);
      if (it != places_.end()) return it->second;
    }
    const FiniteField* K = canonical_field(p.deg);
    if (p.a >= K->size() || p.b >= K->size() || !curve_.on_curve(K, static_cast<fe>(p.a), static_cast<fe>(p.b)))
      throw ParameterError("unknown elliptic place");
    PlaceKey k = register_point(p.deg, K, static_cast<fe>(p.a), static_cast<fe>(p.b));
    if (!(k == p)) throw ParameterError("non-canonical elliptic place key");
    std::lock_guard<std::mutex> lk(mu_);
    return places_.at(p);
  }

  // Places above the monic irreducible pi(x).
  std::vector<PlaceKey> places_over(const Poly& pi) const {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = over_.find(pi.encode());
      if (it != over_.end()) return it->second;
    }
    const int e = pi.deg();
    std::vector<PlaceKey> out;
    auto roots_in = [&](const FiniteField* K, const Poly& f) {
      std::vector<fe> r;
      for (auto& [g, m] : factor(f))
        if (g.deg() == 1) r.push_back(K->neg(g[0]));
      return r;
    };
    auto ys_over = [&](const FiniteField* K, fe x0) {
      // Y^2 + b(x0) Y - c(x0)
      fe bx = b_.eval_in(K, x0), cx = c_.eval_in(K, x0);
      return roots_in(K, Poly(K, {K->neg(cx), bx, 1}));
    };
    const FiniteField* K = canonical_field(e);
    auto xr = roots_in(K, Poly(K, pi.coeffs()));
    if (xr.empty()) throw ConsistencyError("irreducible polynomial has no root in its degree field");
    auto ys = ys_over(K, xr[0]);
    if (!ys.empty()) {
      for (fe y0 : ys) out.push_back(register_point(e, K, xr[0], y0));
    } else {
      const FiniteField* K2 = canonical_field(2 * e);
      auto xr2 = roots_in(K2, Poly(K2, pi.coeffs()));
      auto ys2 = ys_over(K2, xr2.at(0));
      if (ys2.empty()) throw ConsistencyError("no point above an inert prime");
      out.push_back(register_point(2 * e, K2, xr2[0], ys2[0]));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::lock_guard<std::mutex> lk(mu_);
    over_[pi.encode()] = out;
    return out;
  }

  // Expansion of x and y in a local parameter s at the place, to O(s^prec).
  Local local(const PlaceKey& p, std::int64_t prec) const {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = locals_.find(p);
      if (it != locals_.end() && it->second.prec >= prec)
        return Local{prec, it->second.X.truncate(prec), it->second.Y.truncate(prec)};
    }
    const PlaceData& D = data(p);
    const FiniteField* K = D.K;
    FqDomain dom{K};
    auto cst = [&](fe c) { return FqSeries::constant(dom, "s", c, prec); };
    FqSeries s = FqSeries::monomial(dom, "s", 1, 1, prec);
    auto W = [&](const FqSeries& X, const FqSeries& Y) {
      return Y * Y + (cst(curve_.a1) * X + cst(curve_.a3)) * Y - (X * X * X + cst(curve_.a2) * X * X + cst(curve_.a4) * X + cst(curve_.a6));
    };
    Local L;
    L.prec = prec;
    fe wy = curve_.wy(K, D.x0, D.y0);
    if (wy != 0) {
      L.X = cst(D.x0) + s;
      L.Y = cst(D.y0);
      fe inv = K->inv(wy);
      for (std::int64_t it = 0; it <= prec + 1; ++it) {
        FqSeries nY = L.Y - W(L.X, L.Y).scale(inv);
        if (nY.agrees(L.Y)) break;
        L.Y = nY;
      }
    } else {
      fe wx = curve_.wx(K, D.x0, D.y0);
      if (wx == 0) throw ConsistencyError("singular point on a nonsingular model");
      L.Y = cst(D.y0) + s;
      L.X = cst(D.x0);
      fe inv = K->inv(wx);
      for (std::int64_t it = 0; it <= prec + 1; ++it) {
        FqSeries nX = L.X - W(L.X, L.Y).scale(inv);
        if (nX.agrees(L.X)) break;
        L.X = nX;
      }
    }
    if (!W(L.X, L.Y).is_zero()) throw ConsistencyError("local expansion does not satisfy the curve equation");
    std::lock_guard<std::mutex> lk(mu_);
    auto& slot = locals_[p];
    if (slot.prec < prec) slot = L;
    return L;
  }

  std::int64_t numerator_valuation(const Elem& x, const PlaceKey& p, const PlaceData& D) const {
    const std::int64_t e = D.ramified ? 2 : 1;
    if (x.v.is_zero()) return e * x.u.valuation(D.pi);
    // v_P(u + v y) <= v_P(norm) because the conjugate is integral at P.
    Poly N = norm_numerator(x);
    std::int64_t prec = e * N.valuation(D.pi) + 1;
    Local L = local(p, prec);
    FqDomain dom{D.K};
    auto eval = [&](const Poly& f) {
      FqSeries acc(dom, "s", prec);
      for (int i = f.deg(); i >= 0; --i) acc = acc * L.X + FqSeries::constant(dom, "s", f[i], prec);
      return acc;
    };
    FqSeries val = eval(x.u) + eval(x.v) * L.Y;
    if (val.is_zero()) throw PrecisionError("local valuation exceeds the norm bound");
    return val.val();
  }

  WeierstrassCurve curve_;
  std::vector<std::int64_t> araw_;
  std::vector<Point> points_;
  std::map<Point, int> index_;
  mutable std::mutex mu_;
  mutable std::map<int, const FiniteField*> fields_;
  mutable std::map<PlaceKey, PlaceData> places_;
  mutable std::map<std::uint64_t, std::vector<PlaceKey>> over_;
  mutable std::map<PlaceKey, Local> locals_;
};

}  // namespace

RingPtr Ring::elliptic(std::uint64_t q, const std::vector<std::int64_t>& a) {
  if (!FiniteField::prime_power(q)) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  if (q > 256) throw ParameterError("elliptic rings are supported for q <= 256");
  if (a.size() != 5) throw ParameterError("expected five Weierstrass coefficients a1,a2,a3,a4,a6");
  const FiniteField* F = FiniteField::get(q);
  return std::make_shared<EllipticRing>(F, a);
}

}  // namespace cusp
