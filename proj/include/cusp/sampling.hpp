#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cusp/ring.hpp"

namespace cusp {

// Random nonzero element (u + v y)/d with every part of degree <= maxdeg.
template <class Rng>
Elem random_elem(const Ring& R, Rng& rng, int maxdeg) {
  const FiniteField* F = R.field();
  auto rp = [&](int d, bool monic) {
    std::vector<fe> c;
    for (int i = 0; i <= d; ++i) c.push_back(static_cast<fe>(rng() % F->size()));
    if (monic) c.back() = 1;
    return Poly(F, c);
  };
  std::uniform_int_distribution<int> dd(0, maxdeg);
  Poly u = rp(dd(rng), false), d = rp(dd(rng), true);
  Poly v = R.family() == Family::Elliptic ? rp(dd(rng), false) : Poly(F);
  if (u.is_zero() && v.is_zero()) u = Poly::constant(F, 1);
  return R.make(u, v, d);
}

// Product of up to two places of degree <= 2 with exponents in [lo, hi].
template <class Rng>
Ideal random_ideal(const Ring& R, Rng& rng, int lo, int hi) {
  auto places = R.places_up_to(2);
  Ideal a;
  std::uniform_int_distribution<int> ex(lo, hi);
  for (int k = 0; k < 2; ++k) {
    auto& p = places[rng() % places.size()];
    std::int64_t e = a[p] + ex(rng);
    if (e == 0) a.erase(p); else a[p] = e;
  }
  return a;
}

}  // namespace cusp
