#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cusp/rational.hpp"
#include "cusp/ring.hpp"

namespace cusp {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct SuiteResult {
  std::string name;
  std::int64_t passed = 0, failed = 0;
  std::vector<std::string> failures;  // first few messages
  double seconds = 0;
  bool ok() const { return failed == 0; }
};

struct SelftestReport {
  std::uint64_t seed = kDefaultSeed;
  std::vector<SuiteResult> suites;
  bool ok() const;
  std::int64_t passed() const;
  std::int64_t failed() const;
};

// The rings the suites run on: poly q=2,3; shifted (2, T^2+T+1), (3, T^2+1);
// elliptic (2, [0,0,1,0,0]), (3, [0,0,0,2,1]).
std::vector<RingPtr> default_rings();
std::vector<std::string> suite_names();
// Runs the named suites (all when empty) on the given rings (default_rings when empty).
SelftestReport run_selftest(std::uint64_t seed = kDefaultSeed, const std::vector<std::string>& only = {},
                            std::vector<RingPtr> rings = {});

// c_{r,1}(n) = (q - 1)^-1 prod_i (q_i^r - 1) q_i^((s_i - 1) r) for n = prod p_i^s_i, q_i = q^deg p_i.
Int c_r1_formula(const Ring& R, const Ideal& n, int r);
// Primitive vectors of (A/n)^r modulo F_q^*, by enumeration; polynomial rings only.
Int c_r1_brute(const Ring& R, const Ideal& n, int r);
// sum over d | n of mu(d) q^(r deg(n/d)): the primitive-vector count by Mobius inversion.
Int primitive_count_mobius(const Ring& R, const Ideal& n, int r);

}  // namespace cusp
