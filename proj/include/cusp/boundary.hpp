#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cusp/cyclo.hpp"
#include "cusp/expansions.hpp"
#include "cusp/rational.hpp"
#include "cusp/ring.hpp"
#include "cusp/zeta.hpp"

namespace cusp {

enum class OrderUnit { U, Tn, T };
std::string unit_str(OrderUnit u);

struct OrderReport {
  std::string ring;
  int r = 2;
  std::string target;  // e.g. "Delta_n", "Delta_n^b", "E_1,u", "E_k,u", "Delta"
  int cls = 0;         // boundary divisor (a)
  std::vector<std::pair<std::string, Rat>> values;  // intermediate special values
  Rat order;
  bool integral = false;
  OrderUnit unit = OrderUnit::U;
  Int int_order() const;
};

// ord_(a)(Delta_n) = zeta_(a^-1 n)(1-r) - q^(r deg n) zeta_(a^-1)(1-r); must be a positive integer.
OrderReport ord_discriminant(const Ring& R, const Ideal& n, int cls, int r);
// Same with a^-1 replaced by a^-1 b^-1.
OrderReport ord_discriminant_twisted(const Ring& R, const Ideal& n, const Ideal& b, int cls, int r);

// Class index -> order.
using CuspidalDivisor = std::map<int, Int>;
CuspidalDivisor divisor_of_discriminant(const Ring& R, const Ideal& n, const Ideal& b, int r);

struct DivisorMatrix {
  int r = 2;
  Ideal b;
  std::vector<Ideal> reps;           // columns
  std::vector<std::vector<Int>> M;   // M[class][column]
  Int det;
};
// Columns default to nontrivial_representatives(); det != 0 is asserted.
DivisorMatrix cuspidal_matrix(const Ring& R, int r, std::vector<Ideal> reps = {}, const Ideal& b = {});

Int bareiss_det(std::vector<std::vector<Int>> m);
Rat rational_det(std::vector<std::vector<Rat>> m);

struct FrobeniusCheck {
  Rat det_N;
  std::vector<Cyclo> l_values;  // one per character, in characters() order
  Rat l_product;
  int sign = 0;  // det_N = sign * l_product
  bool match = false;
};
// N[(a)][i] = zeta_(a^-1 b^-1 n_i)(1-r); det N = +-prod_chi L(chi, 1-r).
FrobeniusCheck frobenius_det_crosscheck(const Ring& R, int r, std::vector<Ideal> reps = {}, const Ideal& b = {});

// k = q^((r-1)(deg n - deg a)) (zeta_{u1,a}(1-r) - zeta_{0,a}(1-r)) in t_n units.
OrderReport ord_division_form(const Ring& R, const Ideal& a, const Ideal& n, const Elem& u1, int r);
// gamma(k) times the division-form order.
OrderReport ord_higher_eisenstein(const Ring& R, const Ideal& a, const Ideal& n, const Elem& u1, int weight, int r);

// Representatives of big / small for fractional ideals small in big.
std::vector<Elem> quotient_representatives(const Ring& R, const Ideal& big, const Ideal& small);

// (q - 1) q^((r-1) deg n).
Int ramification_index(const Ring& R, const Ideal& n, int r);

struct AggregationCheck {
  Int sum_over_u;    // sum over nonzero u in (n^-1 / A)^r of the t_n-order of E_{1,u} at (A)
  Int ramification;  // ramification_index(n, r)
  Int ord_delta;     // ord_(A)(Delta_n) in u units
  bool holds() const { return sum_over_u == ramification * ord_delta; }
};
// Only the first coordinate u1 of u matters at the cusp (A); the other r - 1
// coordinates contribute the factor q^((r-1) deg n).
AggregationCheck aggregation_check(const Ring& R, const Ideal& n, int r);

struct CanonicalDelta {
  OrderReport order;  // k = (1 - q_inf^r) zeta_(a^-1)(1-r) in t units
  int d = 0, d2 = 0;  // element degrees with d2 = d + d_inf
  BezoutCertificate bezout;
  Int weight;         // q_inf^r - 1
  int type_h = 0;     // d_inf mod (q - 1)
};
CanonicalDelta ord_canonical_delta(const Ring& R, int cls, int r);

}  // namespace cusp
