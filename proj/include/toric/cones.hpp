#pragma once

// Nef, ample and anti-nef membership via the support-function criterion.

#include "toric/fan.hpp"
#include "toric/frobenius.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

struct NefVerdict {
  DivisorClass cls;
  bool is_nef = false;
  bool is_ample = false;
  /// First (cone, ray) with <m_sigma, v_rho> < -a_rho; set iff !is_nef.
  std::optional<std::pair<std::size_t, RayIndex>> failing;
  /// First (cone, ray) where the inequality is tight; set iff nef but not ample.
  std::optional<std::pair<std::size_t, RayIndex>> tight;
};

/// Nef iff <m_sigma, v_rho> >= -a_rho for every maximal cone sigma and ray
/// rho outside it; ample iff every such inequality is strict.
NefVerdict is_nef(const Variety& x, const TorusDivisor& d);
bool is_antinef(const Variety& x, const TorusDivisor& d);

/// frob(X) intersected with the anti-nef cone, sorted by class.
std::vector<DivisorClass> bu_set(const Variety& x);
std::vector<DivisorClass> bu_set(const Variety& x, const FrobSet& frob);

enum class FanoStatus { Fano, NefFano, Neither };

std::string to_string(FanoStatus s);
FanoStatus nef_fano_status(const Variety& x);

}  // namespace toric
