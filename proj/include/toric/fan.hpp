#pragma once

// Fans of smooth complete toric varieties, their divisors and Picard groups.

#include "toric/lattice.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using RayIndex = std::size_t;
using RayMask = std::uint64_t;

/// Raw fan data as read from a file or produced by a constructor.
struct Fan {
  std::string name;
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<RayIndex>> max_cones;
};

/// Sorts indices inside each cone and the cones lexicographically.
Fan normalized(Fan fan);

struct ValidationIssue {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  bool well_formed = true;  // dimensions and indices consistent
  bool primitive = true;
  bool distinct_rays = true;
  bool simplicial = true;
  bool smooth = true;
  bool rays_covered = true;
  bool ridge_paired = true;
  bool connected = true;
  bool point_location = true;
  std::vector<ValidationIssue> failures;

  bool ok() const { return failures.empty(); }
};

/// Structural checks on a fan: primitivity, smoothness, completeness surrogate
/// (ridge pairing, dual-graph connectivity, random point location).
ValidationReport validate(const Fan& fan);

class InvalidFan : public std::invalid_argument {
 public:
  explicit InvalidFan(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct TorusDivisor {
  IntVec coeffs;  // one per ray

  friend bool operator==(const TorusDivisor&, const TorusDivisor&) = default;
};

TorusDivisor operator+(const TorusDivisor& a, const TorusDivisor& b);
TorusDivisor operator-(const TorusDivisor& a, const TorusDivisor& b);
TorusDivisor operator-(const TorusDivisor& a);
TorusDivisor operator*(const Integer& k, const TorusDivisor& d);

/// Point of Pic(X) in the canonical (Hermite-normalized) coordinates of the fan.
struct DivisorClass {
  IntVec coords;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b);
};

/// Per maximal cone sigma, m_sigma with <m_sigma, v_rho> = -a_rho on its rays.
struct CartierData {
  std::vector<IntVec> m;
};

/// Subset of rays with the reduced cohomology of the induced subcomplex of
/// the fan's nerve; degree[p] = rank H~^{p-1}.
struct Carrier {
  RayMask mask = 0;
  std::vector<std::size_t> degree;
};

/// A validated smooth complete fan together with its derived lattice data.
/// Immutable; copies share the lazily built caches.
class Variety {
 public:
  /// Throws InvalidFan unless validate(fan) passes every check.
  explicit Variety(Fan fan);

  const Fan& fan() const { return fan_; }
  const std::string& name() const { return fan_.name; }
  std::size_t dim() const { return fan_.dim; }
  std::size_t num_rays() const { return fan_.rays.size(); }
  std::size_t num_cones() const { return fan_.max_cones.size(); }
  std::size_t pic_rank() const { return pic_basis_.rows(); }

  const IntVec& ray(RayIndex i) const { return fan_.rays[i]; }
  const std::vector<RayMask>& cone_masks() const { return cone_masks_; }
  /// Rows are the lattice functionals whose values give Pic coordinates.
  const IntMat& pic_basis() const { return pic_basis_; }

  /// Inverse of the matrix whose rows are the rays of cone c (in cone order).
  const IntMat& cone_inverse(std::size_t c) const { return cone_inverse_[c]; }

  /// True iff the rays in mask span a cone of the fan.
  bool is_face(RayMask mask) const;

  /// Ray subsets whose induced nerve subcomplex has nonzero reduced
  /// cohomology (including the empty set), computed once per variety.
  const std::vector<Carrier>& carriers() const;

  TorusDivisor zero_divisor() const { return {IntVec(num_rays(), Integer(0))}; }
  TorusDivisor ray_divisor(RayIndex i) const;
  /// div(chi^w) = sum <w, v_rho> D_rho
  TorusDivisor principal_divisor(std::span<const Integer> w) const;
  TorusDivisor representative(const DivisorClass& cls) const;

 private:
  struct Caches;

  Fan fan_;
  std::vector<RayMask> cone_masks_;
  std::vector<IntMat> cone_inverse_;
  IntMat pic_basis_;
  IntMat pic_section_;  // pic_basis_ * pic_section_ = identity
  std::shared_ptr<Caches> caches_;
};

DivisorClass divisor_class(const Variety& x, const TorusDivisor& d);
CartierData cartier_data(const Variety& x, const TorusDivisor& d);
/// K_X = -sum D_rho
TorusDivisor canonical_divisor(const Variety& x);

// Constructors. All produce normalized fans.
Fan projective_space(std::size_t n);
/// Rays (1,0),(0,1),(-1,a),(0,-1).
Fan hirzebruch(long a);
/// Rays of a (padded with zeros) followed by rays of b; cones are unions.
Fan product(const Fan& a, const Fan& b);
/// Inserts the ray sum of the cone's rays (appended last) and replaces every
/// maximal cone containing the cone by its subdivision.
Fan star_subdivision(const Fan& fan, const std::vector<RayIndex>& cone);

/// True iff some lattice automorphism maps the rays and cones of a onto b.
bool fans_isomorphic(const Fan& a, const Fan& b);

}  // namespace toric
