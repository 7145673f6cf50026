#pragma once

// Splitting of the toric Frobenius pushforward into line bundles, and the
// finite set of classes that occur as summands for some ell.

#include "toric/fan.hpp"
#include "toric/linear_system.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace toric {

/// One summand O(D_u) of (F_ell)_* O(D) indexed by the residue u in
/// {0..ell-1}^n, with coefficients floor((a_rho + <u, v_rho>) / ell).
struct FrobSummand {
  IntVec residue;
  unsigned long ell = 1;
  TorusDivisor divisor;
  DivisorClass cls;
};

FrobSummand frobenius_summand(const Variety& x, const TorusDivisor& d, unsigned long ell,
                              std::span<const Integer> residue);

/// Classes of all ell^n summands of (F_ell)_* O(D), sorted, with repetition.
std::vector<DivisorClass> pushforward_summands(const Variety& x, const TorusDivisor& d, unsigned long ell);
/// Single-threaded reference for pushforward_summands.
std::vector<DivisorClass> pushforward_summands_serial(const Variety& x, const TorusDivisor& d,
                                                      unsigned long ell);

/// Class -> multiplicity view of a summand list.
std::map<DivisorClass, std::size_t> tally(const std::vector<DivisorClass>& summands);

struct FrobEntry {
  DivisorClass cls;
  /// Floor vector b of the first chamber (lexicographic in b) realizing cls.
  TorusDivisor divisor;
  /// {b_rho <= <t, v_rho> < b_rho + 1, 0 <= t_i < 1}
  LinearSystem chamber;
  RatVec witness;
  /// Least ell with cls among the summands of (F_ell)_* O.
  unsigned long min_ell = 0;
};

struct FrobSet {
  std::vector<FrobEntry> entries;  // sorted by class
  unsigned long stabilizing_ell = 0;

  std::size_t size() const { return entries.size(); }
  bool contains(const DivisorClass& c) const;
  std::vector<DivisorClass> classes() const;
};

/// All classes b(t) = floor(<t, v_rho>) over rational t in [0,1)^n, found by
/// depth-first search over the chambers of the arrangement in the unit cube.
FrobSet frob_set(const Variety& x);

/// Least ell whose pushforward contains every class of frob_set(x).
unsigned long minimal_stabilizing_ell(const Variety& x);

}  // namespace toric
