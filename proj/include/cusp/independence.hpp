#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "cusp/ring.hpp"
#include "cusp/series.hpp"

namespace cusp {

// Elements of K_inf as Laurent series in the uniformizer pi over the residue field.
using KSeries = Series<FqDomain>;

// Embedding of K into K_inf = F_{q_inf}((pi)).
//   polynomial: pi = 1/T.
//   shifted:    pi = g, T = tau(pi) with g(tau) = pi and tau(0) the generator of F_q[T]/g.
//   elliptic:   pi = z = -x/y, x = z/w, y = -1/w with w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3.
class Completion {
 public:
  explicit Completion(RingPtr R);
  const Ring& ring() const { return *R_; }
  const FiniteField* residue_field() const { return Finf_; }
  std::string uniformizer() const;
  // x known to absolute precision abs_prec (digits below pi^abs_prec); zero maps to exact zero.
  KSeries embed(const Elem& x, std::int64_t abs_prec) const;
  // Valuation in pi units: -deg x / d_inf.
  std::int64_t valuation(const Elem& x) const;

  // Images of the coordinate functions to absolute precision W.
  KSeries coordinate(std::int64_t W) const;  // T or x
  KSeries y_series(std::int64_t W) const;     // elliptic only

 private:
  KSeries poly_at(const Poly& p, const KSeries& t) const;
  RingPtr R_;
  const FiniteField* Finf_;
  FqDomain D_;
  Poly g_;
};

struct MMatrix {
  int k = 0;
  std::int64_t P = 0, D = 0;
  std::vector<Ideal> reps;
  bool transposed = true;
  // transposed: E[i][j] = M(a_j, a_i); otherwise E[i][j] = M(a_i, a_j).
  // M(a, b) = sum over t in a b^-1 modulo F^*, deg t <= D, of t^-k; known to pi^P.
  std::vector<std::vector<KSeries>> E;
};

// D = ceil(P d_inf / k) so every omitted term has valuation >= P.
MMatrix m_matrix(RingPtr R, int k, std::int64_t P = 8, bool transposed = true);

struct IndependenceReport {
  std::vector<std::vector<std::int64_t>> valuation;  // capped at P
  std::vector<std::vector<fe>> residue;              // digit of pi^0
  bool integral = true, upper = true, unit_diagonal = true;
  fe det_residue = 0;
  std::vector<std::string> violations;
  bool ok() const { return integral && upper && unit_diagonal && det_residue == 1; }
};
IndependenceReport independence_certificate(const MMatrix& m);

}  // namespace cusp
