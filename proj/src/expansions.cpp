#include "cusp/expansions.hpp"

#include <numeric>

#include "cusp/errors.hpp"

namespace cusp {

namespace {

using Twisted = std::vector<FqRat>;  // sum c_i tau^i

FqRat frob_n(FqRat x, int n) {
  for (int i = 0; i < n; ++i) x = x.frob();
  return x;
}

// (sum x_i tau^i)(sum y_k tau^k) = sum x_i y_k^(q^i) tau^(i+k).
Twisted twisted_mul(const Twisted& x, const Twisted& y, const FiniteField* F) {
  Twisted r(x.size() + y.size() - 1, FqRat(F));
  for (std::size_t k = 0; k < y.size(); ++k) {
    FqRat yk = y[k];
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i].is_zero() && !yk.is_zero()) r[i + k] += x[i] * yk;
      yk = yk.frob();
    }
  }
  return r;
}

FqRat fq(const Poly& p) { return FqRat(p); }

FqRat T_pow_minus_T(const FiniteField* F, int k) {
  // T^(q^k) - T.
  Poly T = Poly::var(F);
  return FqRat(frob_n(FqRat(T), k).num() - T);
}

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<Poly> monic_polys(const FiniteField* F, int d) {
  std::vector<Poly> out;
  const std::uint64_t qd = upow(F->size(), d);
  for (std::uint64_t c = qd; c < 2 * qd; ++c) out.push_back(Poly::decode(F, c));
  return out;
}

}  // namespace

int DrinfeldCoeffs::rank() const { return a.deg() < 1 ? 0 : static_cast<int>(l.size() - 1) / a.deg(); }

DrinfeldCoeffs drinfeld_coeffs(const Poly& a, const std::vector<FqRat>& lT) {
  const FiniteField* F = a.field();
  if (a.is_zero()) throw ParameterError("phi_0 is not a module coefficient list");
  if (lT.empty() || lT.back().is_zero()) throw ParameterError("leading coefficient of phi_T must be nonzero");
  Twisted phiT{FqRat::T(F)};
  phiT.insert(phiT.end(), lT.begin(), lT.end());
  Twisted acc{FqRat(F)}, power{FqRat::constant(F, 1)};
  for (int j = 0; j <= a.deg(); ++j) {
    if (acc.size() < power.size()) acc.resize(power.size(), FqRat(F));
    if (a[j] != 0)
      for (std::size_t i = 0; i < power.size(); ++i) acc[i] += FqRat::constant(F, a[j]) * power[i];
    if (j < a.deg()) power = twisted_mul(phiT, power, F);
  }
  while (acc.size() > 1 && acc.back().is_zero()) acc.pop_back();
  return DrinfeldCoeffs{a, acc};
}

DrinfeldCoeffs carlitz_coeffs(const Poly& a) { return drinfeld_coeffs(a, {FqRat::constant(a.field(), 1)}); }

std::vector<FqRat> exp_from_module(const DrinfeldCoeffs& phi, int K) {
  const FiniteField* F = phi.a.field();
  if (phi.a.deg() < 1) throw ParameterError("base element must be non-constant");
  std::vector<FqRat> alpha{FqRat::constant(F, 1)};
  const FqRat a = fq(phi.a);
  for (int k = 1; k <= K; ++k) {
    // alpha_k (a^(q^k) - a) = sum_{i=1..k} l_i alpha_{k-i}^(q^i).
    FqRat rhs(F);
    for (int i = 1; i <= k && i < static_cast<int>(phi.l.size()); ++i) rhs += phi.l[i] * frob_n(alpha[k - i], i);
    alpha.push_back(rhs / (frob_n(a, k) - a));
  }
  return alpha;
}

DrinfeldCoeffs module_from_exp(const Poly& a, int rank, const std::vector<FqRat>& alpha) {
  const int top = rank * a.deg();
  if (static_cast<int>(alpha.size()) <= top) throw ParameterError("not enough exponential coefficients");
  const FqRat A = fq(a);
  std::vector<FqRat> l{A};
  for (int k = 1; k <= top; ++k) {
    FqRat v = alpha[k] * (frob_n(A, k) - A);
    for (int i = 1; i < k; ++i) v -= l[i] * frob_n(alpha[k - i], i);
    l.push_back(v);
  }
  if (l.back().is_zero()) throw ConsistencyError("leading module coefficient vanishes");
  return DrinfeldCoeffs{a, l};
}

namespace {

// (1 + sum_k alpha_k z^(q^k - 1))^-1 to O(z^prec).
TSeries inverse_exp_ratio(const FiniteField* F, const std::vector<FqRat>& alpha, std::int64_t prec) {
  const FqRatDomain D{F};
  const std::int64_t q = static_cast<std::int64_t>(F->size());
  std::vector<FqRat> c(static_cast<std::size_t>(prec), FqRat(F));
  c[0] = FqRat::constant(F, 1);
  std::int64_t qk = q;
  for (std::size_t k = 1; k < alpha.size() && qk - 1 < prec; ++k, qk *= q) c[static_cast<std::size_t>(qk - 1)] = alpha[k];
  return TSeries(D, "z", 0, c, prec).inv();
}

}  // namespace

std::vector<FqRat> eisenstein_from_exp(const std::vector<FqRat>& alpha, int K) {
  const FiniteField* F = alpha.at(0).field();
  const std::int64_t qK = static_cast<std::int64_t>(upow(F->size(), K));
  TSeries B = inverse_exp_ratio(F, alpha, qK);
  std::vector<FqRat> E{FqRat(F)};
  for (int k = 1; k <= K; ++k) E.push_back(-B[static_cast<std::int64_t>(upow(F->size(), k)) - 1]);
  return E;
}

std::vector<FqRat> exp_from_eisenstein(const std::vector<FqRat>& E, int K) {
  const FiniteField* F = E.at(0).field();
  std::vector<FqRat> alpha{FqRat::constant(F, 1)};
  for (int k = 1; k <= K; ++k) {
    // With alpha_k = 0 the coefficient is beta; in truth it is beta - alpha_k = -E.
    const std::int64_t n = static_cast<std::int64_t>(upow(F->size(), k)) - 1;
    FqRat beta = inverse_exp_ratio(F, alpha, n + 1)[n];
    alpha.push_back(E.at(static_cast<std::size_t>(k)) + beta);
  }
  return alpha;
}

std::vector<FqRat> carlitz_exp(const FiniteField* F, int K) {
  std::vector<FqRat> alpha{FqRat::constant(F, 1)};
  for (int k = 1; k <= K; ++k) alpha.push_back(alpha.back().frob() / T_pow_minus_T(F, k));
  return alpha;
}

int GossTable::gamma(int k) const {
  const auto& g = G.at(static_cast<std::size_t>(k));
  for (std::size_t j = 0; j < g.size(); ++j)
    if (!g[j].is_zero()) return static_cast<int>(j);
  throw ConsistencyError("Goss polynomial vanishes identically");
}

GossTable goss_polys(const FiniteField* F, const std::vector<FqRat>& alpha, int K) {
  const int q = static_cast<int>(F->size());
  GossTable t;
  t.G.assign(static_cast<std::size_t>(K) + 1, {});
  if (K >= 1) t.G[1] = {FqRat(F), FqRat::constant(F, 1)};
  for (int k = 2; k <= K; ++k) {
    std::vector<FqRat> inner = t.G[static_cast<std::size_t>(k - 1)];
    inner.resize(static_cast<std::size_t>(k), FqRat(F));
    int qi = q;
    for (std::size_t i = 1; qi < k; ++i, qi *= q) {
      if (i >= alpha.size()) throw ParameterError("Goss recursion needs more exponential coefficients");
      const auto& h = t.G[static_cast<std::size_t>(k - qi)];
      for (std::size_t j = 0; j < h.size(); ++j) inner[j] += alpha[i] * h[j];
    }
    std::vector<FqRat> g(static_cast<std::size_t>(k) + 1, FqRat(F));
    for (std::size_t j = 0; j < inner.size(); ++j) g[j + 1] = inner[j];
    t.G[static_cast<std::size_t>(k)] = std::move(g);
  }
  return t;
}

int goss_gamma(std::uint64_t q, int k) {
  if (k < 1) throw ParameterError("Goss index must be positive");
  const FiniteField* F = FiniteField::get(q);
  int K = 0;
  for (std::uint64_t qi = q; qi < static_cast<std::uint64_t>(k); qi *= q) ++K;
  return goss_polys(F, carlitz_exp(F, K), k).gamma(k);
}

TSeries SPolynomial::series(const FiniteField* F, std::int64_t prec) const {
  std::vector<FqRat> c(static_cast<std::size_t>(std::min(prec, degree() + 1)), FqRat(F));
  for (auto& [e, x] : coeffs)
    if (e < prec) c[static_cast<std::size_t>(e)] = x;
  return TSeries(FqRatDomain{F}, "t", 0, c, prec);
}

SPolynomial s_polynomial(const Poly& m) {
  const FiniteField* F = m.field();
  if (!m.is_monic()) throw ParameterError("S_m needs a monic m");
  SPolynomial s;
  if (m.deg() == 0) {
    s.coeffs[0] = FqRat::constant(F, 1);
    return s;
  }
  DrinfeldCoeffs phi = carlitz_coeffs(m);
  const int d = m.deg();
  const std::int64_t qd = static_cast<std::int64_t>(upow(F->size(), d));
  const FqRat delta = phi.l.at(static_cast<std::size_t>(d));
  for (int i = 0; i <= d; ++i) {
    FqRat c = phi.l[static_cast<std::size_t>(i)] / delta;
    if (!c.is_zero()) s.coeffs[qd - static_cast<std::int64_t>(upow(F->size(), i))] = c;
  }
  return s;
}

SymbolicS s_polynomial_symbolic(std::uint64_t q, int r, int deg_m, const std::string& name) {
  if (r < 2 || deg_m < 0) throw ParameterError("symbolic S_m needs r >= 2 and deg m >= 0");
  SymbolicS s;
  const int top = (r - 1) * deg_m;
  const std::int64_t qtop = static_cast<std::int64_t>(upow(q, top));
  const std::string D = "D_" + name;
  s.ring.declare(D, qtop - 1);
  s.coeffs[0] = GradedElem::constant(1);
  for (int i = 0; i < top; ++i) {
    const std::int64_t qi = static_cast<std::int64_t>(upow(q, i));
    const std::string li = "l_" + name + "_" + std::to_string(i);
    s.ring.declare(li, qi - 1);
    s.coeffs[qtop - qi] = GradedElem::gen(li) * GradedElem::gen(D, -1);
  }
  return s;
}

TSeries t_level_relation(const Poly& n, std::int64_t prec) {
  const FiniteField* F = n.field();
  if (n.deg() < 1) throw ParameterError("level must be a proper ideal");
  const std::int64_t qd = static_cast<std::int64_t>(upow(F->size(), n.deg()));
  if (prec <= qd) throw ParameterError("precision must exceed q^deg n");
  TSeries S = s_polynomial(n).series(F, prec - qd);
  return S.inv().shift(qd);
}

TExpansion delta_product_series(std::uint64_t q, std::int64_t N) {
  const FiniteField* F = FiniteField::get(q);
  const PolyDomain PD{F};
  const std::int64_t qq = static_cast<std::int64_t>(q);
  const std::int64_t rel = N + 1 - (qq - 1);
  if (rel < 1) throw ParameterError("precision below the leading term");
  int D = 0;
  for (std::int64_t qd = qq; qd <= N; qd *= qq) ++D;
  Series<PolyDomain> acc = Series<PolyDomain>::constant(PD, "t", Poly::constant(F, 1), rel);
  for (int d = 1; d <= D; ++d)
    for (auto& b : monic_polys(F, d)) {
      SPolynomial S = s_polynomial(b);
      std::vector<Poly> c(static_cast<std::size_t>(std::min<std::int64_t>(rel, S.degree() + 1)), Poly(F));
      for (auto& [e, x] : S.coeffs) {
        if (!x.is_poly()) throw ConsistencyError("S_b has a coefficient outside F_q[T]");
        if (e < rel) c[static_cast<std::size_t>(e)] = x.num();
      }
      acc *= Series<PolyDomain>(PD, "t", 0, c, rel).pow((qq - 1) * (qq * qq - 1));
    }
  acc = -acc.shift(qq - 1);
  const FqRatDomain FD{F};
  std::vector<FqRat> c;
  for (std::int64_t e = acc.val(); e < acc.prec(); ++e) c.push_back(FqRat(acc[e]));
  return TExpansion{"t", "product", TSeries(FD, "t", acc.val(), c, acc.prec()), static_cast<std::int64_t>(q * q - 1)};
}

EisensteinRoute eisenstein_route(std::uint64_t q, std::int64_t N) {
  const FiniteField* F = FiniteField::get(q);
  const FqRatDomain FD{F};
  const std::int64_t qq = static_cast<std::int64_t>(q), P = N + 1;
  const std::vector<FqRat> alphaC = carlitz_exp(F, 2);
  const std::vector<FqRat> EC = eisenstein_from_exp(alphaC, 2);
  const int k1 = static_cast<int>(qq - 1), k2 = static_cast<int>(qq * qq - 1);
  const GossTable goss = goss_polys(F, alphaC, k2);
  auto goss_series = [&](int k) {
    const auto& g = goss.G[static_cast<std::size_t>(k)];
    return TSeries::exact(FD, "X", 0, g);
  };
  const TSeries G1 = goss_series(k1), G2 = goss_series(k2);
  TSeries sum1(FD, "t", P), sum2(FD, "t", P);
  const TSeries inv_t = TSeries::monomial(FD, "t", FqRat::constant(F, 1), -1);
  for (std::int64_t d = 0, qd = 1; qd <= N; ++d, qd *= qq)
    for (auto& a : monic_polys(F, static_cast<int>(d))) {
      // phi_a(1/t) by Horner in phi_T(w) = T w + w^q.
      TSeries w(FD, "t", kExactPrec);
      for (int j = a.deg(); j >= 0; --j) {
        w = w.scale(FqRat::T(F)) + w.map([](const FqRat& x) { return x.frob(); }).stretch(qq);
        if (a[j] != 0) w += inv_t.scale(FqRat::constant(F, a[j]));
      }
      TSeries ta = w.inv(P - qd);
      sum1 += G1.compose(ta);
      sum2 += G2.compose(ta);
    }
  EisensteinRoute r;
  r.E1 = TSeries::constant(FD, "t", EC[1], P) - sum1;
  r.E2 = TSeries::constant(FD, "t", EC[2], P) - sum2;
  const TSeries a1 = r.E1;
  const TSeries a2 = r.E2 + a1.pow(qq + 1);
  r.g = a1.scale(T_pow_minus_T(F, 1));
  r.delta = a2.scale(T_pow_minus_T(F, 2)) - r.g * a1.pow(qq);
  return r;
}

TExpansion delta_via_eisenstein_series(std::uint64_t q, std::int64_t N) {
  return TExpansion{"t", "eisenstein", eisenstein_route(q, N).delta, static_cast<std::int64_t>(q * q - 1)};
}

std::int64_t first_difference(const TSeries& a, const TSeries& b) {
  const std::int64_t p = std::min(a.prec(), b.prec());
  for (std::int64_t e = std::min(a.val(), b.val()); e < p; ++e)
    if (a[e] != b[e]) return e;
  return -1;
}

std::string series_dump(const TSeries& s) {
  std::string out;
  for (auto& [e, c] : s.terms()) out += std::to_string(e) + "\t" + c.str() + "\n";
  return out;
}

BezoutCertificate canonical_delta_exponents(std::uint64_t q, int d_inf, int r, int d, int d2) {
  if (d < 1 || d2 < 1 || r < 1 || d_inf < 1) throw ParameterError("degrees and rank must be positive");
  if (std::gcd(d, d2) != d_inf) throw ParameterError("gcd(d, d') must equal d_inf");
  BezoutCertificate c;
  const Int Q(q);
  c.i = ipow(Q, static_cast<std::uint64_t>(r * d)) - 1;
  c.i2 = ipow(Q, static_cast<std::uint64_t>(r * d2)) - 1;
  c.j = ipow(Q, static_cast<std::uint64_t>(r * d_inf)) - 1;
  // Extended Euclid on (i, i2).
  Int r0 = c.i, r1 = c.i2, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int qt = r0 / r1;
    Int tmp = r0 - qt * r1;
    r0 = r1, r1 = tmp;
    tmp = s0 - qt * s1, s0 = s1, s1 = tmp;
    tmp = t0 - qt * t1, t0 = t1, t1 = tmp;
  }
  c.gcd = r0;
  if (c.gcd != c.j) throw ConsistencyError("gcd(q^(rd) - 1, q^(rd') - 1) != q^(r gcd(d, d')) - 1");
  c.x = s0;
  c.x2 = t0;
  c.shifted_pair = d2 == d + d_inf;
  bool ok = c.x * c.i + c.x2 * c.i2 == c.j;
  if (c.shifted_pair) ok = ok && -(c.j + 1) * c.i + c.i2 == c.j;
  c.valid = ok;
  if (!ok) throw ConsistencyError("Bezout certificate fails");
  return c;
}

}  // namespace cusp
