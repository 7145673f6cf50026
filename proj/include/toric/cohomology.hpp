#pragma once

// Line bundle cohomology on smooth complete toric varieties, computed weight
// by weight: for m in M, H^p(X, O(D))_m is the reduced cohomology
// H~^{p-1} of the nerve subcomplex on Neg(m) = {rho : <m, v_rho> < -a_rho}.

#include "toric/fan.hpp"
#include "toric/linear_system.hpp"

#include <stdexcept>
#include <vector>

namespace toric {

struct WeightPattern {
  RayMask neg = 0;
  /// neg rho: <m, v_rho> <= -a_rho - 1 ; other rho: <m, v_rho> >= -a_rho
  LinearSystem region;
  std::vector<std::size_t> reduced;  // reduced[p] = rank H~^{p-1}
  Integer points = 0;
};

struct CohomologyVector {
  std::vector<Integer> h;  // h^0 .. h^n
  std::vector<WeightPattern> patterns;  // contributing patterns, sorted by mask

  Integer euler() const;
  bool vanishes_above_zero() const;
};

class InfiniteCohomology : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cohomology dimensions of the single weight m.
std::vector<std::size_t> weight_cohomology(const Variety& x, const TorusDivisor& d, std::span<const Integer> m);

LinearSystem pattern_region(const Variety& x, const TorusDivisor& d, RayMask neg);

CohomologyVector cohomology(const Variety& x, const TorusDivisor& d);
/// Single-threaded reference for cohomology.
CohomologyVector cohomology_serial(const Variety& x, const TorusDivisor& d);

/// Ext^i(L, M) = H^i(X, M - L).
CohomologyVector ext_dims(const Variety& x, const DivisorClass& l, const DivisorClass& m);
Integer euler_chi(const Variety& x, const DivisorClass& l, const DivisorClass& m);

}  // namespace toric
