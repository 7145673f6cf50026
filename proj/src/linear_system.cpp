#include "toric/linear_system.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toric {

bool LinearSystem::has_strict() const {
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [](const Constraint& c) { return c.rel == Relation::Less; });
}

LinearSystem& LinearSystem::add(Constraint c) {
  if (c.coeffs.size() != dim_) throw std::invalid_argument("LinearSystem: constraint dimension mismatch");
  constraints_.push_back(std::move(c));
  return *this;
}

LinearSystem& LinearSystem::add(RatVec coeffs, Rational constant, Relation rel) {
  return add(Constraint{std::move(coeffs), std::move(constant), rel});
}

namespace {

RatVec to_rat(std::span<const Integer> v, int sign = 1) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(sign * x);
  return r;
}

}  // namespace

LinearSystem& LinearSystem::add_le(std::span<const Integer> coeffs, const Integer& constant) {
  return add(to_rat(coeffs), Rational(constant), Relation::LessEqual);
}
LinearSystem& LinearSystem::add_lt(std::span<const Integer> coeffs, const Integer& constant) {
  return add(to_rat(coeffs), Rational(constant), Relation::Less);
}
LinearSystem& LinearSystem::add_ge(std::span<const Integer> coeffs, const Integer& constant) {
  return add(to_rat(coeffs, -1), Rational(-constant), Relation::LessEqual);
}
LinearSystem& LinearSystem::add_gt(std::span<const Integer> coeffs, const Integer& constant) {
  return add(to_rat(coeffs, -1), Rational(-constant), Relation::Less);
}
LinearSystem& LinearSystem::add_eq(std::span<const Integer> coeffs, const Integer& constant) {
  return add(to_rat(coeffs), Rational(constant), Relation::Equal);
}

LinearSystem LinearSystem::closure() const {
  LinearSystem c = *this;
  for (auto& con : c.constraints_)
    if (con.rel == Relation::Less) con.rel = Relation::LessEqual;
  return c;
}

namespace {

template <typename T>
bool check_point(const std::vector<Constraint>& cons, std::span<const T> x) {
  for (const auto& c : cons) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) lhs += c.coeffs[i] * x[i];
    switch (c.rel) {
      case Relation::LessEqual:
        if (!(lhs <= c.constant)) return false;
        break;
      case Relation::Less:
        if (!(lhs < c.constant)) return false;
        break;
      case Relation::Equal:
        if (lhs != c.constant) return false;
        break;
    }
  }
  return true;
}

}  // namespace

bool LinearSystem::satisfied_by(std::span<const Rational> x) const {
  if (x.size() != dim_) throw std::invalid_argument("satisfied_by: dimension mismatch");
  return check_point(constraints_, x);
}

bool LinearSystem::satisfied_by(std::span<const Integer> x) const {
  if (x.size() != dim_) throw std::invalid_argument("satisfied_by: dimension mismatch");
  return check_point(constraints_, x);
}

std::string LinearSystem::to_string() const {
  std::ostringstream os;
  for (const auto& c : constraints_) {
    bool first = true;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (c.coeffs[i] == 0) continue;
      if (!first) os << " + ";
      os << c.coeffs[i].get_str() << "*t" << i;
      first = false;
    }
    if (first) os << '0';
    os << (c.rel == Relation::LessEqual ? " <= " : c.rel == Relation::Less ? " < " : " = ")
       << c.constant.get_str() << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Dense exact simplex (Bland's rule) on free variables split as x = xp - xm.
// A strict row a.x < c is encoded as a.x + s <= c with a margin variable
// 0 <= s <= 1; the strict system is feasible iff max s > 0.

namespace {

class Simplex {
 public:
  Simplex(const LinearSystem& sys, bool with_margin) : n_(sys.dim()) {
    const auto& cons = sys.constraints();
    margin_ = with_margin && sys.has_strict();
    std::size_t ineq = 0;
    for (const auto& c : cons)
      if (c.rel != Relation::Equal) ++ineq;
    rows_ = cons.size() + (margin_ ? 1 : 0);
    const std::size_t slack_begin = 2 * n_ + (margin_ ? 1 : 0);
    art_begin_ = slack_begin + ineq + (margin_ ? 1 : 0);
    cols_ = art_begin_ + rows_;
    tab_.assign(rows_ * (cols_ + 1), Rational(0));
    basis_.assign(rows_, 0);

    std::size_t slack = slack_begin;
    for (std::size_t r = 0; r < cons.size(); ++r) {
      const auto& c = cons[r];
      for (std::size_t j = 0; j < n_; ++j) {
        at(r, j) = c.coeffs[j];
        at(r, n_ + j) = -c.coeffs[j];
      }
      if (c.rel != Relation::Equal) at(r, slack++) = 1;
      if (margin_ && c.rel == Relation::Less) at(r, 2 * n_) = 1;
      rhs(r) = c.constant;
    }
    if (margin_) {
      const std::size_t r = cons.size();
      at(r, 2 * n_) = 1;
      at(r, slack++) = 1;
      rhs(r) = 1;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (rhs(r) < 0)
        for (std::size_t j = 0; j <= cols_; ++j) at(r, j) = -at(r, j);
      at(r, art_begin_ + r) = 1;
      basis_[r] = art_begin_ + r;
    }
  }

  /// Phase one; false when the system is infeasible.
  bool make_feasible() {
    std::vector<Rational> cost(cols_, Rational(0));
    for (std::size_t j = art_begin_; j < cols_; ++j) cost[j] = 1;
    allowed_.assign(cols_, true);
    minimize(cost);
    Rational infeas = 0;
    for (std::size_t r = 0; r < rows_; ++r)
      if (basis_[r] >= art_begin_) infeas += rhs(r);
    if (infeas != 0) return false;
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j)
        if (at(r, j) != 0) {
          pivot(r, j);
          break;
        }
    }
    for (std::size_t j = art_begin_; j < cols_; ++j) allowed_[j] = false;
    return true;
  }

  /// Maximize objective . x (plus weight on the margin). nullopt if unbounded.
  std::optional<Rational> maximize(std::span<const Rational> objective, const Rational& margin_weight) {
    std::vector<Rational> cost(cols_, Rational(0));
    for (std::size_t j = 0; j < objective.size(); ++j) {
      cost[j] = -objective[j];
      cost[n_ + j] = objective[j];
    }
    if (margin_) cost[2 * n_] = -margin_weight;
    if (!minimize(cost)) return std::nullopt;
    Rational value = 0;
    for (std::size_t r = 0; r < rows_; ++r) value -= cost[basis_[r]] * rhs(r);
    return value;
  }

  RatVec point() const {
    RatVec x(n_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::size_t b = basis_[r];
      if (b < n_) x[b] += rhs(r);
      else if (b < 2 * n_) x[b - n_] -= rhs(r);
    }
    return x;
  }

  Rational margin() const {
    for (std::size_t r = 0; r < rows_; ++r)
      if (basis_[r] == 2 * n_) return rhs(r);
    return 0;
  }

 private:
  Rational& at(std::size_t r, std::size_t c) { return tab_[r * (cols_ + 1) + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return tab_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, cols_); }
  const Rational& rhs(std::size_t r) const { return at(r, cols_); }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational p = at(pr, pc);
    for (std::size_t j = 0; j <= cols_; ++j) at(pr, j) /= p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || at(r, pc) == 0) continue;
      const Rational f = at(r, pc);
      for (std::size_t j = 0; j <= cols_; ++j)
        if (at(pr, j) != 0) at(r, j) -= f * at(pr, j);
    }
    basis_[pr] = pc;
  }

  // false when unbounded
  bool minimize(const std::vector<Rational>& cost) {
    std::vector<bool> basic(cols_, false);
    for (;;) {
      std::fill(basic.begin(), basic.end(), false);
      for (auto b : basis_) basic[b] = true;
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_ && enter == cols_; ++j) {
        if (!allowed_.empty() && !allowed_[j]) continue;
        if (basic[j]) continue;
        Rational rc = cost[j];
        for (std::size_t r = 0; r < rows_; ++r)
          if (at(r, j) != 0 && cost[basis_[r]] != 0) rc -= cost[basis_[r]] * at(r, j);
        if (rc < 0) enter = j;
      }
      if (enter == cols_) return true;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, enter) <= 0) continue;
        Rational ratio = rhs(r) / at(r, enter);
        if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

  std::size_t n_;
  bool margin_ = false;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t art_begin_ = 0;
  std::vector<Rational> tab_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
};

}  // namespace

std::optional<RatVec> find_point(const LinearSystem& s) {
  Simplex lp(s, true);
  if (!lp.make_feasible()) return std::nullopt;
  if (s.has_strict()) {
    const RatVec zero(s.dim(), Rational(0));
    lp.maximize(zero, Rational(1));
    if (lp.margin() <= 0) return std::nullopt;
  }
  return lp.point();
}

bool feasible(const LinearSystem& s) { return find_point(s).has_value(); }

std::optional<Rational> maximize_relaxed(const LinearSystem& s, std::span<const Rational> objective) {
  if (objective.size() != s.dim()) throw std::invalid_argument("maximize_relaxed: objective dimension");
  Simplex lp(s, false);
  if (!lp.make_feasible()) throw std::domain_error("maximize_relaxed: empty region");
  return lp.maximize(objective, Rational(0));
}

bool is_bounded(const LinearSystem& s) {
  if (!feasible(s)) throw std::domain_error("is_bounded: system is infeasible");
  const std::size_t n = s.dim();
  LinearSystem cone(n);
  for (const auto& c : s.constraints())
    cone.add(c.coeffs, Rational(0), c.rel == Relation::Equal ? Relation::Equal : Relation::LessEqual);
  for (std::size_t i = 0; i < n; ++i)
    for (int sign : {1, -1}) {
      LinearSystem probe = cone;
      RatVec e(n, Rational(0));
      e[i] = -sign;
      probe.add(std::move(e), Rational(-1), Relation::LessEqual);  // sign*d_i >= 1
      if (feasible(probe)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Lattice points: bounding box from the relaxation, then a depth-first sweep
// that prunes with per-constraint interval bounds over the remaining box.

namespace {

struct IntConstraint {
  IntVec coeffs;
  Integer bound;  // coeffs . x <= bound, or == bound when equality
  bool equality = false;
};

IntConstraint integralize(const Constraint& c) {
  Integer l = c.constant.get_den();
  for (const auto& q : c.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntConstraint ic;
  ic.coeffs.reserve(c.coeffs.size());
  for (const auto& q : c.coeffs) ic.coeffs.push_back(q.get_num() * (l / q.get_den()));
  ic.bound = c.constant.get_num() * (l / c.constant.get_den());
  if (c.rel == Relation::Less) ic.bound -= 1;
  ic.equality = c.rel == Relation::Equal;
  return ic;
}

template <typename Visit>
class BoxSweep {
 public:
  BoxSweep(std::vector<IntConstraint> cons, IntVec lo, IntVec hi, Visit visit)
      : cons_(std::move(cons)), lo_(std::move(lo)), hi_(std::move(hi)), visit_(visit) {
    const std::size_t n = lo_.size();
    // rest_min/rest_max[k][j]: range of sum_{i>=k} coeff_ji x_i over the box
    rest_min_.assign(n + 1, IntVec(cons_.size(), Integer(0)));
    rest_max_.assign(n + 1, IntVec(cons_.size(), Integer(0)));
    for (std::size_t k = n; k-- > 0;)
      for (std::size_t j = 0; j < cons_.size(); ++j) {
        const Integer& a = cons_[j].coeffs[k];
        Integer p = a * lo_[k], q = a * hi_[k];
        rest_min_[k][j] = rest_min_[k + 1][j] + (p < q ? p : q);
        rest_max_[k][j] = rest_max_[k + 1][j] + (p < q ? q : p);
      }
    partial_.assign(cons_.size(), Integer(0));
    x_.assign(n, Integer(0));
  }

  void run() { descend(0); }

 private:
  void descend(std::size_t k) {
    const std::size_t n = lo_.size();
    for (std::size_t j = 0; j < cons_.size(); ++j) {
      if (partial_[j] + rest_min_[k][j] > cons_[j].bound) return;
      if (cons_[j].equality && partial_[j] + rest_max_[k][j] < cons_[j].bound) return;
    }
    if (k == n) {
      visit_(x_);
      return;
    }
    for (x_[k] = lo_[k]; x_[k] <= hi_[k]; ++x_[k]) {
      for (std::size_t j = 0; j < cons_.size(); ++j) partial_[j] += cons_[j].coeffs[k] * x_[k];
      descend(k + 1);
      for (std::size_t j = 0; j < cons_.size(); ++j) partial_[j] -= cons_[j].coeffs[k] * x_[k];
    }
  }

  std::vector<IntConstraint> cons_;
  IntVec lo_, hi_;
  Visit visit_;
  std::vector<IntVec> rest_min_, rest_max_;
  IntVec partial_;
  IntVec x_;
};

template <typename Visit>
void sweep_lattice(const LinearSystem& s, Visit visit) {
  if (!feasible(s)) return;
  const std::size_t n = s.dim();
  const LinearSystem rel = s.closure();
  IntVec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n, Rational(0));
    e[i] = 1;
    auto up = maximize_relaxed(rel, e);
    e[i] = -1;
    auto down = maximize_relaxed(rel, e);
    if (!up || !down) throw std::domain_error("lattice_points: unbounded region");
    hi[i] = floor_of(*up);
    lo[i] = ceil_of(-*down);
    if (lo[i] > hi[i]) return;
  }
  std::vector<IntConstraint> cons;
  cons.reserve(s.constraints().size());
  for (const auto& c : s.constraints()) cons.push_back(integralize(c));
  BoxSweep<Visit> sweep(std::move(cons), std::move(lo), std::move(hi), visit);
  sweep.run();
}

}  // namespace

std::vector<IntVec> lattice_points(const LinearSystem& s) {
  std::vector<IntVec> pts;
  sweep_lattice(s, [&](const IntVec& x) { pts.push_back(x); });
  return pts;
}

Integer count_lattice_points(const LinearSystem& s) {
  Integer count = 0;
  sweep_lattice(s, [&](const IntVec&) { ++count; });
  return count;
}

}  // namespace toric
