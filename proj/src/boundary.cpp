#include "cusp/boundary.hpp"

#include <algorithm>

#include "cusp/errors.hpp"

namespace cusp {

namespace {

Rat class_value(const Ring& R, int cls, int r) { return special_value(class_zeta(R, cls), R.q(), r); }

Int q_pow(const Ring& R, std::int64_t e) { return ipow(Int(R.q()), static_cast<std::uint64_t>(e)); }

void require_proper_integral(const Ring& R, const Ideal& n) {
  if (!ideal_integral(n) || R.degree(n) == 0) throw ParameterError("n must be a proper integral ideal");
}

void require_rank(int r) {
  if (r < 2) throw ParameterError("rank r must be at least 2");
}

}  // namespace

std::string unit_str(OrderUnit u) {
  switch (u) {
    case OrderUnit::U: return "u";
    case OrderUnit::Tn: return "t_n";
    case OrderUnit::T: return "t";
  }
  return "?";
}

Int OrderReport::int_order() const {
  if (!integral) throw ConsistencyError("order " + rat_str(order) + " is not an integer");
  return numerator(order);
}

OrderReport ord_discriminant_twisted(const Ring& R, const Ideal& n, const Ideal& b, int cls, int r) {
  require_rank(r);
  require_proper_integral(R, n);
  if (cls < 0 || cls >= R.class_number()) throw ParameterError("class index out of range");
  OrderReport rep;
  rep.ring = R.spec();
  rep.r = r;
  rep.target = b.empty() ? "Delta_n" : "Delta_n^b";
  rep.cls = cls;
  // Class of a^-1 b^-1.
  const int base = R.pic_add(R.pic_neg(cls), R.pic_neg(R.pic_class(b)));
  const int with_n = R.pic_add(base, R.pic_class(n));
  const Rat z1 = class_value(R, with_n, r), z0 = class_value(R, base, r);
  rep.values = {{"zeta_(a^-1 b^-1 n)(1-r)", z1}, {"zeta_(a^-1 b^-1)(1-r)", z0}};
  rep.order = z1 - Rat(q_pow(R, static_cast<std::int64_t>(r) * R.degree(n))) * z0;
  rep.integral = is_integer(rep.order);
  rep.unit = OrderUnit::U;
  if (!rep.integral) throw ConsistencyError("discriminant order " + rat_str(rep.order) + " is not an integer");
  if (rep.order <= 0) throw ConsistencyError("discriminant order " + rat_str(rep.order) + " is not positive");
  return rep;
}

OrderReport ord_discriminant(const Ring& R, const Ideal& n, int cls, int r) { return ord_discriminant_twisted(R, n, Ideal{}, cls, r); }

CuspidalDivisor divisor_of_discriminant(const Ring& R, const Ideal& n, const Ideal& b, int r) {
  CuspidalDivisor D;
  for (int c = 0; c < R.class_number(); ++c) D[c] = ord_discriminant_twisted(R, n, b, c, r).int_order();
  return D;
}

Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rat rational_det(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[k], m[p]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = m[i][k] / m[k][k];
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

namespace {

std::vector<Ideal> default_reps(const Ring& R, std::vector<Ideal> reps, bool proper) {
  if (reps.empty()) reps = R.nontrivial_representatives();
  if (static_cast<std::int64_t>(reps.size()) != R.class_number()) throw ParameterError("need one representative per class");
  std::vector<int> seen;
  for (auto& n : reps) {
    if (proper) require_proper_integral(R, n);
    else if (!ideal_integral(n)) throw ParameterError("representatives must be integral");
    seen.push_back(R.pic_class(n));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw ParameterError("representatives must lie in distinct classes");
  return reps;
}

}  // namespace

DivisorMatrix cuspidal_matrix(const Ring& R, int r, std::vector<Ideal> reps, const Ideal& b) {
  require_rank(r);
  DivisorMatrix D;
  D.r = r;
  D.b = b;
  D.reps = default_reps(R, std::move(reps), true);
  const int h = static_cast<int>(R.class_number());
  std::vector<Rat> zv(static_cast<std::size_t>(h));
  for (int c = 0; c < h; ++c) zv[static_cast<std::size_t>(c)] = class_value(R, c, r);
  D.M.assign(static_cast<std::size_t>(h), std::vector<Int>(D.reps.size()));
  const int cb = R.pic_class(b);
  for (int a = 0; a < h; ++a)
    for (std::size_t i = 0; i < D.reps.size(); ++i) {
      const int base = R.pic_add(R.pic_neg(a), R.pic_neg(cb));
      const Ideal& n = D.reps[i];
      Rat ord = zv[static_cast<std::size_t>(R.pic_add(base, R.pic_class(n)))] -
                Rat(q_pow(R, static_cast<std::int64_t>(r) * R.degree(n))) * zv[static_cast<std::size_t>(base)];
      if (!is_integer(ord) || ord <= 0) throw ConsistencyError("matrix entry " + rat_str(ord) + " is not a positive integer");
      D.M[static_cast<std::size_t>(a)][i] = numerator(ord);
    }
  D.det = bareiss_det(D.M);
  if (D.det == 0) throw ConsistencyError("cuspidal divisor matrix is singular");
  return D;
}

FrobeniusCheck frobenius_det_crosscheck(const Ring& R, int r, std::vector<Ideal> reps, const Ideal& b) {
  require_rank(r);
  // N only sees classes, so the unit ideal may stand for the trivial class.
  reps = default_reps(R, std::move(reps), false);
  const int h = static_cast<int>(R.class_number());
  std::vector<Rat> zv(static_cast<std::size_t>(h));
  for (int c = 0; c < h; ++c) zv[static_cast<std::size_t>(c)] = class_value(R, c, r);
  const int cb = R.pic_class(b);
  std::vector<std::vector<Rat>> N(static_cast<std::size_t>(h), std::vector<Rat>(reps.size()));
  for (int a = 0; a < h; ++a)
    for (std::size_t i = 0; i < reps.size(); ++i)
      N[static_cast<std::size_t>(a)][i] = zv[static_cast<std::size_t>(R.pic_add(R.pic_add(R.pic_neg(a), R.pic_neg(cb)), R.pic_class(reps[i])))];
  FrobeniusCheck fc;
  fc.det_N = rational_det(N);
  const auto chis = characters(R);
  Cyclo prod(chis.empty() ? 1 : chis[0].m, Rat(1));
  for (auto& chi : chis) {
    Cyclo v = l_function(R, chi).value(R.q(), r);
    if (v.is_zero()) throw ConsistencyError("an L-value vanishes at s = 1 - r");
    fc.l_values.push_back(v);
    prod = prod * v;
  }
  auto pr = prod.rational();
  if (!pr) throw ConsistencyError("product of L-values is not rational");
  fc.l_product = *pr;
  if (fc.det_N == fc.l_product) fc.sign = 1;
  else if (fc.det_N == -fc.l_product) fc.sign = -1;
  fc.match = fc.sign != 0;
  if (!fc.match) throw ConsistencyError("det N = " + rat_str(fc.det_N) + " but prod L = " + rat_str(fc.l_product));
  return fc;
}

OrderReport ord_division_form(const Ring& R, const Ideal& a, const Ideal& n, const Elem& u1, int r) {
  require_rank(r);
  if (!ideal_integral(n)) throw ParameterError("n must be integral");
  if (!R.contains(ideal_mul(ideal_inv(n), a), u1)) throw ParameterError("u1 must lie in n^-1 a");
  OrderReport rep;
  rep.ring = R.spec();
  rep.r = r;
  rep.target = "E_1,u";
  rep.cls = 0;
  const Rat zu = special_value(coset_zeta(R, u1, a), R.q(), r);
  const Rat z0 = special_value(zero_coset_zeta(R, a), R.q(), r);
  rep.values = {{"zeta_(u1,a)(1-r)", zu}, {"zeta_(0,a)(1-r)", z0}};
  const std::int64_t e = static_cast<std::int64_t>(r - 1) * (R.degree(n) - R.degree(a));
  rep.order = rpow(Rat(static_cast<long long>(R.q())), e) * (zu - z0);
  rep.integral = is_integer(rep.order);
  rep.unit = OrderUnit::Tn;
  const bool in_a = R.contains(a, u1);
  if (rep.order < 0 || (rep.order == 0) != in_a) throw ConsistencyError("division form order " + rat_str(rep.order) + " has the wrong sign");
  return rep;
}

OrderReport ord_higher_eisenstein(const Ring& R, const Ideal& a, const Ideal& n, const Elem& u1, int weight, int r) {
  if (weight < 1) throw ParameterError("weight must be positive");
  OrderReport rep = ord_division_form(R, a, n, u1, r);
  const int g = goss_gamma(R.q(), weight);
  rep.target = "E_" + std::to_string(weight) + ",u";
  rep.values.push_back({"gamma(k)", Rat(g)});
  rep.order *= g;
  rep.integral = is_integer(rep.order);
  return rep;
}

std::vector<Elem> quotient_representatives(const Ring& R, const Ideal& big, const Ideal& small) {
  if (!ideal_integral(ideal_mul(small, ideal_inv(big)))) throw ParameterError("quotient needs small contained in big");
  const std::int64_t want = static_cast<std::int64_t>(q_pow(R, R.degree(small) - R.degree(big)));
  for (std::int64_t N = R.degree(small);; ++N) {
    std::vector<Elem> reps;
    for (auto& z : R.ideal_elements(big, N)) {
      bool fresh = true;
      for (auto& x : reps)
        if (R.contains(small, R.sub(z, x))) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(z);
    }
    if (static_cast<std::int64_t>(reps.size()) == want) return reps;
    if (N > R.degree(small) + 2 * R.genus() + 2 * R.d_inf() + 2) throw ConsistencyError("quotient representatives not found");
  }
}

Int ramification_index(const Ring& R, const Ideal& n, int r) {
  require_rank(r);
  require_proper_integral(R, n);
  return Int(R.q() - 1) * q_pow(R, static_cast<std::int64_t>(r - 1) * R.degree(n));
}

AggregationCheck aggregation_check(const Ring& R, const Ideal& n, int r) {
  AggregationCheck c;
  c.ramification = ramification_index(R, n, r);
  c.ord_delta = ord_discriminant(R, n, 0, r).int_order();
  Rat sum = 0;
  for (auto& u1 : quotient_representatives(R, ideal_inv(n), Ideal{})) sum += ord_division_form(R, Ideal{}, n, u1, r).order;
  sum *= Rat(q_pow(R, static_cast<std::int64_t>(r - 1) * R.degree(n)));
  if (!is_integer(sum)) throw ConsistencyError("aggregated division-form order is not an integer");
  c.sum_over_u = numerator(sum);
  return c;
}

CanonicalDelta ord_canonical_delta(const Ring& R, int cls, int r) {
  require_rank(r);
  if (cls < 0 || cls >= R.class_number()) throw ParameterError("class index out of range");
  CanonicalDelta cd;
  const int dinf = R.d_inf();
  // Element degrees of A are k d_inf with dim L(k inf) > dim L((k-1) inf).
  auto is_elem_degree = [&](std::int64_t k) { return R.riemann_roch(Ideal{}, k) > R.riemann_roch(Ideal{}, k - 1); };
  std::int64_t k = 1;
  while (!(is_elem_degree(k) && is_elem_degree(k + 1))) {
    if (++k > 64) throw ConsistencyError("no consecutive element degrees found");
  }
  cd.d = static_cast<int>(k * dinf);
  cd.d2 = cd.d + dinf;
  cd.bezout = canonical_delta_exponents(R.q(), dinf, r, cd.d, cd.d2);
  const Int qinf_r = q_pow(R, static_cast<std::int64_t>(dinf) * r);
  cd.weight = qinf_r - 1;
  cd.type_h = dinf % static_cast<int>(R.q() - 1);
  OrderReport& rep = cd.order;
  rep.ring = R.spec();
  rep.r = r;
  rep.target = "Delta";
  rep.cls = cls;
  const Rat z = class_value(R, R.pic_neg(cls), r);
  rep.values = {{"zeta_(a^-1)(1-r)", z}};
  rep.order = Rat(1 - qinf_r) * z;
  rep.integral = is_integer(rep.order);
  rep.unit = OrderUnit::T;
  if (!rep.integral || rep.order <= 0) throw ConsistencyError("canonical discriminant order " + rat_str(rep.order) + " is not a positive integer");
  return cd;
}

}  // namespace cusp
