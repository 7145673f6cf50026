#pragma once

// The candidate tilting bundle T = sum of bu(X), its Ext data, m0(T) and the
// resulting generation-time bounds.

#include "toric/cohomology.hpp"
#include "toric/cones.hpp"
#include "toric/fan.hpp"
#include "toric/frobenius.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

struct TiltingCandidate {
  std::vector<DivisorClass> summands;
  /// ext[a][b][i] = dim Ext^i(L_a, L_b)
  std::vector<std::vector<std::vector<Integer>>> ext;
  /// gram(a, b) = chi(L_a, L_b)
  IntMat gram;
};

TiltingCandidate build_candidate(const Variety& x);
TiltingCandidate build_candidate(const Variety& x, const std::vector<DivisorClass>& summands);
/// Single-threaded reference for build_candidate.
TiltingCandidate build_candidate_serial(const Variety& x, const std::vector<DivisorClass>& summands);

struct ExtViolation {
  std::size_t from = 0;  // index of L_a
  std::size_t to = 0;    // index of L_b
  std::size_t degree = 0;
  Integer dim;
};

struct ExtVanishing {
  bool ok = true;
  std::vector<ExtViolation> witnesses;
};

/// Ext^i(L_a, L_b) = 0 for all i > 0 and all ordered pairs.
ExtVanishing ext_vanishing(const TiltingCandidate& c);

/// Largest m with H^m(X, L_b - L_a - K) != 0 for some pair (a, b).
std::size_t m0(const Variety& x, const TiltingCandidate& c);

/// An ordering of the summands that makes the Gram matrix upper triangular,
/// if the digraph of its nonzero off-diagonal entries is acyclic.
std::optional<std::vector<std::size_t>> gram_triangular_order(const IntMat& gram);

enum class OrlovStatus { VerifiedModuloFullness, HypothesisFailed, NotApplicable };
std::string to_string(OrlovStatus s);

struct OrlovReport {
  std::string name;
  std::size_t dim = 0;
  std::size_t frob_count = 0;
  std::size_t bu_count = 0;
  std::size_t max_cones = 0;
  unsigned long stabilizing_ell = 0;
  FanoStatus fano = FanoStatus::Neither;
  bool anticanonical_nef = false;
  bool ext_vanishing = false;
  std::vector<ExtViolation> ext_witnesses;
  bool k_rank_match = false;
  bool gram_unimodular = false;
  Integer gram_det;
  std::optional<std::vector<std::size_t>> gram_order;
  std::size_t m0 = 0;
  std::size_t gen_time_upper = 0;
  std::size_t rdim_lower = 0;
  OrlovStatus status = OrlovStatus::NotApplicable;
  std::string reason;
  std::vector<DivisorClass> bu;
};

OrlovReport orlov_check(const Variety& x);

struct ChainViolation {
  DivisorClass line;
  unsigned long ell = 0;
  std::size_t degree = 0;
  Integer lhs;
  Integer rhs;
};

struct ChainCheck {
  bool ok = true;
  std::optional<ChainViolation> violation;
};

/// For every L in frob(X) and every degree m:
///   sum over summands B of (F_ell)_* O of h^m(B - L - K)  ==  h^m(-ell (L + K)).
ChainCheck projection_chain_check(const Variety& x, unsigned long ell);
ChainCheck projection_chain_check(const Variety& x, const std::vector<DivisorClass>& lines, unsigned long ell);

}  // namespace toric
