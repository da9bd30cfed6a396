#include "cusp/independence.hpp"

#include <algorithm>
#include <cmath>

#include "cusp/errors.hpp"

namespace cusp {

namespace {

constexpr std::int64_t kMaxWork = 1 << 12;

const FiniteField* residue_of(const Ring& R) {
  if (R.family() != Family::Shifted) return R.field();
  // F_q[T]/g; the generator z is the image of T.
  return FiniteField::extension(R.field(), R.infinity_poly().coeffs());
}

}  // namespace

Completion::Completion(RingPtr R) : R_(std::move(R)), Finf_(residue_of(*R_)), D_{Finf_}, g_(R_->infinity_poly()) {}

std::string Completion::uniformizer() const {
  switch (R_->family()) {
    case Family::Polynomial: return "1/T";
    case Family::Shifted: return g_.str();
    case Family::Elliptic: return "-x/y";
  }
  return "?";
}

KSeries Completion::poly_at(const Poly& p, const KSeries& t) const {
  // Base-field indices are valid in the residue field.
  KSeries acc(D_, "pi", kExactPrec);
  for (int i = p.deg(); i >= 0; --i) acc = acc * t + KSeries::constant(D_, "pi", p[i]);
  return acc;
}

KSeries Completion::coordinate(std::int64_t W) const {
  switch (R_->family()) {
    case Family::Polynomial:
      return KSeries::monomial(D_, "pi", 1, -1);
    case Family::Shifted: {
      // tau <- tau - (g(tau) - pi) / g'(theta): one more digit per step.
      const fe theta = static_cast<fe>(R_->q());
      const fe c = Finf_->inv(g_.derivative().eval_in(Finf_, theta));
      const KSeries pi = KSeries::monomial(D_, "pi", 1, 1);
      KSeries tau = KSeries::constant(D_, "pi", theta, W);
      for (std::int64_t i = 0; i < W; ++i) tau = tau - (poly_at(g_, tau) - pi).scale(c);
      return tau.truncate(W);
    }
    case Family::Elliptic: {
      // x = z / w; w has valuation 3, so W + 5 digits of w give x to pi^W.
      const std::int64_t Ww = W + 5;
      const Poly& b = R_->curve_b();
      const Poly& cc = R_->curve_c();
      const fe a1 = b[1], a3 = b[0], a2 = cc[2], a4 = cc[1], a6 = cc[0];
      const KSeries z = KSeries::monomial(D_, "pi", 1, 1);
      KSeries z3 = KSeries::monomial(D_, "pi", 1, 3, Ww);
      KSeries w = z3;
      for (std::int64_t i = 0; i < Ww; ++i) {
        KSeries w2 = w * w;
        w = z3 + (z * w).scale(a1) + (z * z * w).scale(a2) + w2.scale(a3) + (z * w2).scale(a4) + (w2 * w).scale(a6);
      }
      return (z * w.inv()).truncate(W);
    }
  }
  return KSeries();
}

KSeries Completion::y_series(std::int64_t W) const {
  if (R_->family() != Family::Elliptic) throw ParameterError("y exists only on elliptic rings");
  // y = -x / z.
  KSeries x = coordinate(W + 1);
  return (-(x * KSeries::monomial(D_, "pi", 1, -1))).truncate(W);
}

KSeries Completion::embed(const Elem& x, std::int64_t abs_prec) const {
  if (x.is_zero()) return KSeries(D_, "pi", kExactPrec);
  const std::int64_t v = valuation(x);
  for (std::int64_t W = std::max<std::int64_t>(abs_prec, 1) + 8; W <= kMaxWork; W *= 2) {
    const std::int64_t Wc = W + 3 * (x.u.deg() + x.v.deg() + x.d.deg() + 3);
    KSeries t = coordinate(Wc);
    KSeries num = poly_at(x.u, t);
    if (!x.v.is_zero()) num = num + poly_at(x.v, t) * y_series(Wc);
    KSeries den = poly_at(x.d, t);
    if (den.is_zero() || num.is_zero()) continue;
    KSeries r = num * den.inv(W + std::max<std::int64_t>(0, -v) + 8);
    if (!r.is_zero() && r.val() != v) throw ConsistencyError("embedding valuation disagrees with the degree");
    if (r.prec() >= abs_prec) return r.truncate(abs_prec);
  }
  throw PrecisionError("embedding did not reach the requested precision");
}

std::int64_t Completion::valuation(const Elem& x) const {
  if (x.is_zero()) return kExactPrec;
  const std::int64_t d = R_->elem_degree(x);
  if (d % R_->d_inf() != 0) throw ConsistencyError("element degree not divisible by d_inf");
  return -d / R_->d_inf();
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Sum of t^-k over t in span(basis) with first nonzero coordinate 1.
KSeries projective_power_sum(const FiniteField* F, const FqDomain& D, const std::vector<KSeries>& basis, int k, std::int64_t P) {
  KSeries total(D, "pi", P);
  const std::size_t n = basis.size();
  const std::uint64_t q = F->size();
  // Coordinates c_i, i >= lead: c_lead = 1, c_i free for i > lead.
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<std::pair<std::size_t, KSeries>> stack{{lead + 1, basis[lead]}};
    while (!stack.empty()) {
      auto [i, s] = std::move(stack.back());
      stack.pop_back();
      if (i == n) {
        if (s.is_zero()) throw PrecisionError("element indistinguishable from zero at this precision");
        total += s.inv(P - k * s.val() + 1).pow(k).truncate(P);
        continue;
      }
      for (fe c = 0; c < q; ++c) stack.push_back({i + 1, c == 0 ? s : s + basis[i].scale(c)});
    }
  }
  return total.truncate(P);
}

}  // namespace

MMatrix m_matrix(RingPtr R, int k, std::int64_t P, bool transposed) {
  const std::uint64_t q = R->q();
  if (k < 1 || k % static_cast<int>(q - 1) != 0) throw ParameterError("weight k must be a positive multiple of q - 1");
  if (P < 1) throw ParameterError("precision must be positive");
  Completion C(R);
  MMatrix m;
  m.k = k;
  m.P = P;
  m.D = ceil_div(P * R->d_inf(), k);
  m.transposed = transposed;
  m.reps = R->representatives();
  const std::size_t h = m.reps.size();
  m.E.assign(h, std::vector<KSeries>(h));
  const FqDomain D{C.residue_field()};
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      const Ideal& a = transposed ? m.reps[j] : m.reps[i];
      const Ideal& b = transposed ? m.reps[i] : m.reps[j];
      const Ideal c = ideal_mul(a, ideal_inv(b));
      IdealSpace S = R->ideal_space(c, m.D);
      double work = S.dim() * std::log2(static_cast<double>(q));
      if (work > 22.0) throw PrecisionError("M-matrix enumeration too large; lower the precision P");
      // Elements of degree <= D have valuation >= -D/d_inf; basis digits to P + D/d_inf
      // keep every combination's relative precision at P.
      const std::int64_t abs = P + ceil_div(m.D, R->d_inf()) + 1;
      std::vector<KSeries> basis;
      for (int e = 0; e < S.dim(); ++e) {
        FqVec coords(static_cast<std::size_t>(S.dim()), 0);
        coords[static_cast<std::size_t>(e)] = 1;
        Elem t = R->space_elem(S, coords);
        basis.push_back(C.embed(t, abs));
        // The choice of representative modulo F^* is irrelevant: (c t)^-k = t^-k.
        for (fe s = 2; s < q && e == 0; ++s) {
          KSeries a1 = C.embed(R->scale(t, s), abs), a0 = basis.back();
          KSeries p1 = a1.inv(P + 1).pow(k), p0 = a0.inv(P + 1).pow(k);
          if (!p1.agrees(p0)) throw ConsistencyError("t^-k depends on the scalar representative");
        }
      }
      m.E[i][j] = projective_power_sum(R->field(), D, basis, k, P);
    }
  return m;
}

IndependenceReport independence_certificate(const MMatrix& m) {
  IndependenceReport rep;
  const std::size_t h = m.E.size();
  rep.valuation.assign(h, std::vector<std::int64_t>(h));
  rep.residue.assign(h, std::vector<fe>(h));
  fe det = 1;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      const KSeries& s = m.E[i][j];
      const std::int64_t v = std::min(s.val(), m.P);
      rep.valuation[i][j] = v;
      rep.residue[i][j] = v == 0 ? s[0] : 0;
      auto where = "(" + std::to_string(i) + "," + std::to_string(j) + ") valuation " + std::to_string(v);
      if (v < 0) {
        rep.integral = false;
        rep.violations.push_back("entry outside O_inf at " + where);
      }
      if (i < j && v < 1) {
        rep.upper = false;
        rep.violations.push_back("above-diagonal entry not in the maximal ideal at " + where);
      }
      if (i == j) {
        if (rep.residue[i][j] != 1) {
          rep.unit_diagonal = false;
          rep.violations.push_back("diagonal entry not 1 mod pi at " + where);
        }
        det = s.domain().mul(det, rep.residue[i][j]);
      }
    }
  rep.det_residue = rep.upper ? det : 0;
  return rep;
}

}  // namespace cusp
