#include "cusp/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <set>

#include "cusp/errors.hpp"

namespace cusp {

fe field_elem_from_int(const FiniteField* F, std::int64_t n) {
  if (!F->base()) return F->from_int(n);
  if (n < 0 || n >= static_cast<std::int64_t>(F->size()))
    throw ParameterError("element index out of range for F_" + std::to_string(F->size()));
  return static_cast<fe>(n);
}

Ideal ideal_mul(const Ideal& a, const Ideal& b) {
  Ideal r = a;
  for (auto& [p, e] : b) {
    std::int64_t& x = r[p];
    x += e;
    if (x == 0) r.erase(p);
  }
  return r;
}

Ideal ideal_inv(const Ideal& a) {
  Ideal r;
  for (auto& [p, e] : a) r[p] = -e;
  return r;
}

Ideal ideal_pow(const Ideal& a, std::int64_t n) {
  Ideal r;
  if (n == 0) return r;
  for (auto& [p, e] : a) r[p] = e * n;
  return r;
}

bool ideal_integral(const Ideal& a) {
  return std::all_of(a.begin(), a.end(), [](auto& pe) { return pe.second >= 0; });
}

int ideal_mobius(const Ideal& a) {
  if (!ideal_integral(a)) throw ParameterError("Mobius function needs an integral ideal");
  int s = 1;
  for (auto& [p, e] : a) {
    if (e >= 2) return 0;
    s = -s;
  }
  return s;
}

std::vector<PlaceKey> Ring::places_up_to(int D) const {
  std::vector<PlaceKey> out;
  for (int d = 1; d <= D; ++d) {
    auto v = places_of_degree(d);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::int64_t Ring::degree(const Ideal& a) const {
  std::int64_t s = 0;
  for (auto& [p, e] : a) s += e * p.deg;
  return s;
}

std::string Ring::ideal_str(const Ideal& a) const {
  if (a.empty()) return "A";
  std::string s;
  for (auto& [p, e] : a) {
    if (!s.empty()) s += "*";
    s += place_name(p);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

Ideal Ring::parse_ideal(const std::string& text) const {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ParameterError("empty ideal");
  if (t == "A" || t == "1") return {};
  Ideal out;
  // Split on '*' outside parentheses.
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string f = t.substr(start, end - start);
    if (f.empty()) throw ParameterError("empty factor in ideal '" + text + "'");
    std::int64_t e = 1;
    // A trailing ^e after the place name (not inside parentheses).
    auto close = f.find_last_of(')');
    auto caret = f.find_last_of('^');
    if (caret != std::string::npos && (close == std::string::npos || caret > close)) {
      try {
        std::size_t used = 0;
        e = std::stoll(f.substr(caret + 1), &used);
        if (used != f.size() - caret - 1) throw ParameterError("");
      } catch (...) {
        throw ParameterError("bad exponent in ideal factor '" + f + "'");
      }
      f = f.substr(0, caret);
    }
    out = ideal_mul(out, place_ideal(parse_place(f), e));
  };
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '(') ++depth;
    if (t[i] == ')') --depth;
    if (t[i] == '*' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParameterError("unbalanced parentheses in ideal '" + text + "'");
  flush(t.size());
  return out;
}

std::vector<Ideal> Ring::integral_ideals_of_degree(int n) const {
  if (n < 0) return {};
  {
    std::lock_guard<std::mutex> lk(ideal_mu_);
    auto it = ideal_cache_.find(n);
    if (it != ideal_cache_.end()) return it->second;
  }
  std::vector<PlaceKey> ps = places_up_to(n);
  std::vector<Ideal> out;
  Ideal cur;
  // Choose exponents place by place; remaining degree must reach zero.
  auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (i == ps.size()) return;
    const int d = ps[i].deg;
    for (int e = 0; e * d <= rem; ++e) {
      if (e) cur[ps[i]] = e;
      self(self, i + 1, rem - e * d);
    }
    cur.erase(ps[i]);
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lk(ideal_mu_);
  ideal_cache_.emplace(n, out);
  return out;
}

std::vector<Ideal> Ring::ideals_of_degree(int cls, int n) const {
  std::vector<Ideal> out;
  for (auto& I : integral_ideals_of_degree(n))
    if (pic_class(I) == cls) out.push_back(I);
  return out;
}

namespace {
constexpr int kRepSearchDegree = 12;
}

std::vector<Ideal> Ring::representatives() const {
  const std::int64_t h = pic_order();
  std::vector<std::pair<std::int64_t, Ideal>> found(static_cast<std::size_t>(h), {-1, {}});
  std::int64_t missing = h;
  for (int n = 0; n <= kRepSearchDegree && missing > 0; ++n)
    for (auto& I : integral_ideals_of_degree(n)) {
      auto& slot = found[static_cast<std::size_t>(pic_class(I))];
      if (slot.first < 0) {
        slot = {n, I};
        --missing;
      }
    }
  if (missing) throw ConsistencyError("some ideal class has no integral ideal of small degree");
  std::sort(found.begin(), found.end());
  std::vector<Ideal> out;
  for (auto& f : found) out.push_back(f.second);
  return out;
}

std::vector<Ideal> Ring::representatives_coprime(const Ideal& n) const {
  const std::int64_t h = pic_order();
  std::vector<std::pair<std::int64_t, Ideal>> found(static_cast<std::size_t>(h), {-1, {}});
  std::int64_t missing = h;
  for (int d = 0; d <= kRepSearchDegree && missing > 0; ++d)
    for (auto& I : integral_ideals_of_degree(d)) {
      bool coprime = std::none_of(I.begin(), I.end(), [&](auto& pe) { return n.count(pe.first) != 0; });
      if (!coprime) continue;
      auto& slot = found[static_cast<std::size_t>(pic_class(I))];
      if (slot.first < 0) {
        slot = {d, I};
        --missing;
      }
    }
  if (missing) throw ParameterError("no coprime representative found below the search bound");
  std::sort(found.begin(), found.end());
  std::vector<Ideal> out;
  for (auto& f : found) out.push_back(f.second);
  return out;
}

std::vector<Ideal> Ring::nontrivial_representatives() const {
  std::vector<Ideal> reps = representatives();
  for (int n = 1; n <= kRepSearchDegree; ++n) {
    auto c = ideals_of_degree(0, n);
    if (!c.empty()) {
      reps[0] = c.front();
      return reps;
    }
  }
  throw ConsistencyError("no proper principal ideal found below the search bound");
}

int Ring::pic_class(const Ideal& a) const {
  int c = 0;
  for (auto& [p, e] : a) c = pic_add(c, pic_mul(place_class(p), e));
  return c;
}

int Ring::pic_mul(int a, std::int64_t n) const {
  if (n < 0) return pic_mul(pic_neg(a), -n);
  int r = 0, b = a;
  while (n) {
    if (n & 1) r = pic_add(r, b);
    n >>= 1;
    if (n) b = pic_add(b, b);
  }
  return r;
}

Elem Ring::make(Poly u, Poly v, Poly d) const {
  if (d.is_zero()) throw DomainError("zero denominator");
  if (u.is_zero() && v.is_zero()) return Elem{Poly(F_), Poly(F_), Poly::constant(F_, 1)};
  Poly g = gcd(gcd(u, v), d);
  if (g.deg() > 0) {
    u = u / g;
    v = v / g;
    d = d / g;
  }
  fe l = F_->inv(d.lead());
  return Elem{u.scale(l), v.scale(l), d.scale(l)};
}

Elem Ring::y() const {
  if (fam_ != Family::Elliptic) throw ParameterError("y exists only on elliptic rings");
  return make(Poly(F_), Poly::constant(F_, 1), Poly::constant(F_, 1));
}

Elem Ring::add(const Elem& a, const Elem& b) const {
  if (a.d == b.d) return make(a.u + b.u, a.v + b.v, a.d);
  return make(a.u * b.d + b.u * a.d, a.v * b.d + b.v * a.d, a.d * b.d);
}

Elem Ring::neg(const Elem& a) const { return Elem{-a.u, -a.v, a.d}; }
Elem Ring::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
Elem Ring::scale(const Elem& a, fe c) const { return make(a.u.scale(c), a.v.scale(c), a.d); }

Elem Ring::mul(const Elem& a, const Elem& b) const {
  // y^2 = -b y + c
  Poly vv = a.v * b.v;
  Poly u = a.u * b.u + vv * c_;
  Poly v = a.u * b.v + a.v * b.u - vv * b_;
  return make(u, v, a.d * b.d);
}

Poly Ring::norm_numerator(const Elem& a) const { return a.u * a.u - a.u * a.v * b_ - a.v * a.v * c_; }

Elem Ring::inv(const Elem& a) const {
  if (a.is_zero()) throw DomainError("inverse of zero");
  Poly N = norm_numerator(a);
  // (u + v y)^-1 = ((u - v b) - v y) / N
  return make((a.u - a.v * b_) * a.d, -(a.v * a.d), N);
}

bool Ring::contains(const Ideal& a, const Elem& x) const {
  if (x.is_zero()) return true;
  for (auto& [p, e] : a)
    if (valuation(x, p) < e) return false;
  for (auto& p : pole_candidates(x))
    if (!a.count(p) && valuation(x, p) < 0) return false;
  return true;
}

std::string Ring::elem_str(const Elem& x) const {
  if (x.is_zero()) return "0";
  const char v = var();
  std::string num = x.u.is_zero() ? "" : x.u.str(v);
  // y-terms expanded monomial by monomial so the string reparses.
  for (int i = x.v.deg(); i >= 0; --i) {
    fe c = x.v[i];
    if (!c) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? std::string(1, v) : std::string(1, v) + "^" + std::to_string(i));
    std::string coef = Poly::constant(F_, c).str(v);
    std::string t = (c == 1 ? "" : coef + "*") + (mono.empty() ? "" : mono + "*") + "y";
    if (coef[0] == '-' && c != 1) {
      num += t;
    } else {
      num += (num.empty() ? "" : "+") + t;
    }
  }
  if (x.d.is_one()) return num;
  return "(" + num + ")/(" + x.d.str(v) + ")";
}

namespace {

std::string strip(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  return t;
}

std::string unwrap(std::string s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        outer = false;
        break;
      }
    }
    if (!outer) break;
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

}  // namespace

Elem Ring::parse_elem(const std::string& text) const {
  std::string t = strip(text);
  if (t.empty()) throw ParameterError("empty element");
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '(') ++depth;
    if (t[i] == ')') --depth;
    if (t[i] == '/' && depth == 0) {
      if (slash != std::string::npos) throw ParameterError("more than one '/' in element '" + text + "'");
      slash = i;
    }
  }
  if (depth != 0) throw ParameterError("unbalanced parentheses in element '" + text + "'");
  auto numer = [&](const std::string& s) -> Elem {
    std::string b = unwrap(s);
    if (b.find('(') != std::string::npos) throw ParameterError("nested parentheses in element '" + text + "'");
    // Sum of terms c*v^i*y^j.
    Elem acc = zero();
    std::size_t i = 0;
    bool first = true;
    while (i < b.size()) {
      bool negative = false;
      if (b[i] == '+' || b[i] == '-') {
        negative = b[i] == '-';
        ++i;
      } else if (!first) {
        throw ParameterError("bad element '" + text + "'");
      }
      first = false;
      std::size_t j = i;
      while (j < b.size() && b[j] != '+' && b[j] != '-') ++j;
      std::string term = b.substr(i, j - i);
      i = j;
      if (term.empty()) throw ParameterError("bad element '" + text + "'");
      Elem t1 = one();
      std::size_t k = 0;
      while (k <= term.size()) {
        std::size_t star = term.find('*', k);
        if (star == std::string::npos) star = term.size();
        std::string f = term.substr(k, star - k);
        k = star + 1;
        if (f.empty()) throw ParameterError("bad element '" + text + "'");
        std::int64_t e = 1;
        std::string base = f;
        auto caret = f.find('^');
        if (caret != std::string::npos) {
          base = f.substr(0, caret);
          try {
            std::size_t used = 0;
            e = std::stoll(f.substr(caret + 1), &used);
            if (used != f.size() - caret - 1 || e < 0) throw 0;
          } catch (...) {
            throw ParameterError("bad exponent in element '" + text + "'");
          }
        }
        Elem fac;
        if (base.size() == 1 && base[0] == var()) {
          fac = from_poly(Poly::var(F_));
        } else if (base == "y") {
          fac = y();
        } else if (!base.empty() && std::all_of(base.begin(), base.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
          fac = constant(field_elem_from_int(F_, std::stoll(base)));
        } else {
          throw ParameterError("unknown symbol '" + base + "' in element '" + text + "'");
        }
        Elem p = one();
        for (std::int64_t r = 0; r < e; ++r) p = mul(p, fac);
        t1 = mul(t1, p);
      }
      acc = negative ? sub(acc, t1) : add(acc, t1);
    }
    return acc;
  };
  if (slash == std::string::npos) return numer(t);
  Elem den = numer(t.substr(slash + 1));
  if (den.is_zero()) throw ParameterError("zero denominator in element '" + text + "'");
  return div(numer(t.substr(0, slash)), den);
}

std::int64_t Ring::ideal_space_dim(const Ideal& a, std::int64_t N) const {
  std::int64_t k = N >= 0 ? N / dinf_ : -((-N + dinf_ - 1) / dinf_);
  return riemann_roch(ideal_inv(a), k);
}

Elem Ring::space_elem(const IdealSpace& s, const FqVec& coords) const {
  Poly U(F_), V(F_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i]) continue;
    U += s.nums[i].first.scale(coords[i]);
    V += s.nums[i].second.scale(coords[i]);
  }
  return make(U, V, s.den);
}

std::vector<Elem> Ring::ideal_elements(const Ideal& a, std::int64_t N) const {
  IdealSpace s = ideal_space(a, N);
  const int n = s.dim();
  double bits = n * std::log2(static_cast<double>(q()));
  if (bits > 22.0) throw ParameterError("ideal element enumeration too large (dimension " + std::to_string(n) + ")");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= q();
  std::vector<Elem> out;
  out.reserve(total);
  FqVec c(static_cast<std::size_t>(n), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (int i = n - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = static_cast<fe>(r % q());
      r /= q();
    }
    out.push_back(space_elem(s, c));
  }
  return out;
}

FqMat Ring::coordinates(const std::vector<Elem>& xs) const {
  Poly D = Poly::constant(F_, 1);
  for (auto& x : xs) D = (D * x.d) / gcd(D, x.d);
  std::vector<Poly> U, V;
  int du = -1, dv = -1;
  for (auto& x : xs) {
    Poly f = D / x.d;
    U.push_back(x.u * f);
    V.push_back(x.v * f);
    du = std::max(du, U.back().deg());
    dv = std::max(dv, V.back().deg());
  }
  FqMat m;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    FqVec row;
    for (int j = 0; j <= du; ++j) row.push_back(U[i][j]);
    for (int j = 0; j <= dv; ++j) row.push_back(V[i][j]);
    m.push_back(std::move(row));
  }
  return m;
}

CosetMin Ring::coset_min_degree(const Elem& x, const Ideal& a) const {
  if (contains(a, x)) throw DomainError("coset is the ideal itself");
  const std::int64_t dx = elem_degree(x);
  // x + a lies in b with b_P = min(v_P(x), a_P).
  Ideal b;
  std::set<PlaceKey> support;
  for (auto& [p, e] : a) support.insert(p);
  for (auto& p : pole_candidates(x)) support.insert(p);
  for (auto& p : support) {
    std::int64_t ap = a.count(p) ? a.at(p) : 0;
    std::int64_t e = std::min(valuation(x, p), ap);
    if (e) b[p] = e;
  }
  auto elems = [&](const Ideal& I, std::int64_t N) {
    std::vector<Elem> v;
    IdealSpace s = ideal_space(I, N);
    for (int i = 0; i < s.dim(); ++i) {
      FqVec c(static_cast<std::size_t>(s.dim()), 0);
      c[static_cast<std::size_t>(i)] = 1;
      v.push_back(space_elem(s, c));
    }
    return v;
  };
  // deg(x + z) <= m for some z in a  iff  x in b_m + a_{deg x} (m <= deg x).
  const std::vector<Elem> big = elems(a, dx);
  for (std::int64_t m = degree(b); m <= dx; ++m) {
    std::vector<Elem> gens = elems(b, m);
    if (gens.empty()) continue;
    gens.insert(gens.end(), big.begin(), big.end());
    gens.push_back(x);
    FqMat M = coordinates(gens);
    FqVec target = M.back();
    M.pop_back();
    if (in_span(F_, M, target)) return CosetMin{m, ideal_space_dim(a, m)};
  }
  throw ConsistencyError("coset minimum not reached at deg x");
}

}  // namespace cusp

namespace cusp {

RingPtr Ring::parse(const std::string& spec) {
  std::istringstream in(spec);
  std::string kind;
  in >> kind;
  std::map<std::string, std::string> kv;
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParameterError("expected key=value in ring spec, got '" + tok + "'");
    std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
    if (kv.count(k)) throw ParameterError("duplicate key '" + k + "' in ring spec");
    kv[k] = v;
  }
  auto need = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw ParameterError("ring spec missing '" + k + "'");
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto to_u64 = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used != s.size() || v < 2) throw 0;
      return static_cast<std::uint64_t>(v);
    } catch (...) {
      throw ParameterError("bad field size '" + s + "'");
    }
  };
  RingPtr r;
  if (kind == "poly") {
    r = polynomial(to_u64(need("q")));
  } else if (kind == "shifted") {
    std::uint64_t q = to_u64(need("q"));
    r = shifted(q, need("g"));
  } else if (kind == "elliptic") {
    std::uint64_t q = to_u64(need("q"));
    std::string a = need("a");
    if (a.size() < 2 || a.front() != '[' || a.back() != ']') throw ParameterError("expected a=[a1,a2,a3,a4,a6]");
    std::vector<std::int64_t> coeffs;
    std::stringstream ss(a.substr(1, a.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        coeffs.push_back(std::stoll(item, &used));
        if (used != item.size()) throw 0;
      } catch (...) {
        throw ParameterError("bad Weierstrass coefficient '" + item + "'");
      }
    }
    if (coeffs.size() != 5) throw ParameterError("expected five Weierstrass coefficients a1,a2,a3,a4,a6");
    r = elliptic(q, coeffs);
  } else {
    throw ParameterError("unknown ring family '" + kind + "'");
  }
  if (!kv.empty()) throw ParameterError("unknown key '" + kv.begin()->first + "' in ring spec");
  return r;
}

}  // namespace cusp
