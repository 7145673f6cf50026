#pragma once

// Rational linear systems with strict inequalities, decided exactly.

#include "toric/lattice.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toric {

enum class Relation { LessEqual, Less, Equal };

/// coeffs . x  (rel)  constant
struct Constraint {
  RatVec coeffs;
  Rational constant;
  Relation rel = Relation::LessEqual;
};

class LinearSystem {
 public:
  explicit LinearSystem(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  bool has_strict() const;

  LinearSystem& add(Constraint c);
  LinearSystem& add(RatVec coeffs, Rational constant, Relation rel);
  LinearSystem& add_le(std::span<const Integer> coeffs, const Integer& constant);
  LinearSystem& add_lt(std::span<const Integer> coeffs, const Integer& constant);
  /// coeffs . x >= constant
  LinearSystem& add_ge(std::span<const Integer> coeffs, const Integer& constant);
  /// coeffs . x > constant
  LinearSystem& add_gt(std::span<const Integer> coeffs, const Integer& constant);
  LinearSystem& add_eq(std::span<const Integer> coeffs, const Integer& constant);

  /// Same system with every strict inequality relaxed to a weak one.
  LinearSystem closure() const;

  bool satisfied_by(std::span<const Rational> x) const;
  bool satisfied_by(std::span<const Integer> x) const;

  std::string to_string() const;

 private:
  std::size_t dim_;
  std::vector<Constraint> constraints_;
};

/// True iff some rational point satisfies every constraint; strict
/// inequalities are decided exactly.
bool feasible(const LinearSystem& s);

/// A rational point satisfying the system, if any.
std::optional<RatVec> find_point(const LinearSystem& s);

/// Supremum of objective . x over the closure of s. nullopt when unbounded.
/// Throws std::domain_error when the closure is empty.
std::optional<Rational> maximize_relaxed(const LinearSystem& s, std::span<const Rational> objective);

/// True iff the recession cone of the closure is {0}. Throws std::domain_error
/// when s is infeasible.
bool is_bounded(const LinearSystem& s);

/// Every integer point of s, in lexicographic order. Empty for infeasible
/// systems; throws std::domain_error when the solution set is unbounded.
std::vector<IntVec> lattice_points(const LinearSystem& s);

/// Number of integer points of s; same contract as lattice_points.
Integer count_lattice_points(const LinearSystem& s);

}  // namespace toric
