#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cusp/fqrat.hpp"
#include "cusp/graded.hpp"
#include "cusp/rational.hpp"
#include "cusp/series.hpp"

namespace cusp {

// Rank-2 expansions over A = F_q[T] use the lattice pibar(A w + A) and
// t = 1/e_C(pibar w), where e_C is the Carlitz exponential; every coefficient
// then lies in F_q(T).
using TSeries = Series<FqRatDomain>;

// phi_a = sum l[i] tau^i with l[0] = a.
struct DrinfeldCoeffs {
  Poly a;
  std::vector<FqRat> l;
  int rank() const;
};

// Carlitz module phi_T = T + tau, composed out to phi_a.
DrinfeldCoeffs carlitz_coeffs(const Poly& a);
// Rank-r module from phi_T coefficients l_1..l_r, composed out to phi_a.
DrinfeldCoeffs drinfeld_coeffs(const Poly& a, const std::vector<FqRat>& lT);

// Exponential coefficients alpha_0 = 1, ..., alpha_K from e(az) = phi_a(e(z)).
std::vector<FqRat> exp_from_module(const DrinfeldCoeffs& phi, int K);
// Module coefficients l_0..l_rank from alpha_0..alpha_rank*deg a.
DrinfeldCoeffs module_from_exp(const Poly& a, int rank, const std::vector<FqRat>& alpha);
// E_{q^k - 1} for k = 0..K (entry 0 unused, zero) from 1/e(z) = 1/z - sum E_{j+1} z^j.
std::vector<FqRat> eisenstein_from_exp(const std::vector<FqRat>& alpha, int K);
std::vector<FqRat> exp_from_eisenstein(const std::vector<FqRat>& E, int K);
// alpha_k = 1/D_k for the Carlitz module.
std::vector<FqRat> carlitz_exp(const FiniteField* F, int K);

// G_1 = X, G_k = X (G_{k-1} + sum_{i >= 1, q^i < k} alpha_i G_{k-q^i}).
struct GossTable {
  // G[k][j] = coefficient of X^j; G[0] unused.
  std::vector<std::vector<FqRat>> G;
  int gamma(int k) const;
};
GossTable goss_polys(const FiniteField* F, const std::vector<FqRat>& alpha, int K);
// Vanishing order at X = 0 of the k-th Goss polynomial of the Carlitz lattice.
int goss_gamma(std::uint64_t q, int k);

// S_m(X) = 1 + sum_i (l_i / Delta_m) X^(q^((r-1) deg m) - q^i) for the rank r-1
// part; concrete for r = 2 via the Carlitz module.
struct SPolynomial {
  std::map<std::int64_t, FqRat> coeffs;  // exponent -> coefficient, includes 0 -> 1
  std::int64_t degree() const { return coeffs.rbegin()->first; }
  TSeries series(const FiniteField* F, std::int64_t prec) const;
};
SPolynomial s_polynomial(const Poly& m);

struct SymbolicS {
  GradedRing ring;
  std::map<std::int64_t, GradedElem> coeffs;  // exponent -> l_{m,i} Delta_m^-1
};
// Generators l_<name>_i of weight q^i - 1 and D_<name> of weight q^((r-1)d) - 1.
SymbolicS s_polynomial_symbolic(std::uint64_t q, int r, int deg_m, const std::string& name);

// t = t_n^(q^deg n) / S_n(t_n) for r = 2, to O(t_n^prec).
TSeries t_level_relation(const Poly& n, std::int64_t prec);

struct TExpansion {
  std::string variable;  // "t"
  std::string route;     // "product" or "eisenstein"
  TSeries series;        // precision N + 1
  std::int64_t pibar_exponent = 0;  // Delta(A w + A) = pibar^pibar_exponent * series
};
// -t^(q-1) prod_{b monic, deg b <= log_q N} S_b(t)^((q-1)(q^2-1)).
TExpansion delta_product_series(std::uint64_t q, std::int64_t N);

struct EisensteinRoute {
  TSeries E1, E2;  // E_{q-1}, E_{q^2-1} of the lattice pibar(A w + A)
  TSeries g, delta;
};
// E_k = E_k(pibar A) - sum_{a monic} G_k(t_a), t_a = 1/phi_a(1/t), then g and Delta
// from the relations between alpha and E.
EisensteinRoute eisenstein_route(std::uint64_t q, std::int64_t N);
TExpansion delta_via_eisenstein_series(std::uint64_t q, std::int64_t N);

// -1 if equal below both precisions, else the least differing exponent.
std::int64_t first_difference(const TSeries& a, const TSeries& b);
// "exp\tCOEFF" per nonzero coefficient, COEFF as in FqRat::str().
std::string series_dump(const TSeries& s);

struct BezoutCertificate {
  Int i, i2, j, gcd;  // i = q^(rd) - 1, i2 = q^(rd') - 1, j = q^(r d_inf) - 1
  Int x, x2;          // extended-gcd solution of x i + x2 i2 = j
  bool shifted_pair = false;  // d' = d + d_inf, so (-q_inf^r, 1) also solves it
  bool valid = false;
};
BezoutCertificate canonical_delta_exponents(std::uint64_t q, int d_inf, int r, int d, int d2);

}  // namespace cusp
