#include "toric/cohomology.hpp"

#include "toric/simplicial.hpp"

#include <algorithm>
#include <exception>
#include <optional>

namespace toric {

Integer CohomologyVector::euler() const {
  Integer chi = 0;
  for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 ? -1 : 1) * h[i];
  return chi;
}

bool CohomologyVector::vanishes_above_zero() const {
  return std::all_of(h.begin() + 1, h.end(), [](const Integer& v) { return v == 0; });
}

std::vector<std::size_t> weight_cohomology(const Variety& x, const TorusDivisor& d, std::span<const Integer> m) {
  if (m.size() != x.dim()) throw std::invalid_argument("weight_cohomology: weight has wrong length");
  RayMask neg = 0;
  for (RayIndex r = 0; r < x.num_rays(); ++r)
    if (dot(m, x.ray(r)) < -d.coeffs[r]) neg |= RayMask{1} << r;
  return reduced_cohomology_ranks(x.cone_masks(), neg, x.dim());
}

LinearSystem pattern_region(const Variety& x, const TorusDivisor& d, RayMask neg) {
  LinearSystem s(x.dim());
  for (RayIndex r = 0; r < x.num_rays(); ++r) {
    if (neg >> r & 1) s.add_le(x.ray(r), -d.coeffs[r] - 1);
    else s.add_ge(x.ray(r), -d.coeffs[r]);
  }
  return s;
}

namespace {

// Depth-first assignment of rays to neg/pos. A partial pattern survives only
// if some carrier agrees with it on the assigned rays and its region is
// feasible over the rationals.
class PatternSearch {
 public:
  PatternSearch(const Variety& x, const TorusDivisor& d) : x_(x), d_(d), carriers_(x.carriers()) {}

  struct Node {
    RayIndex next = 0;
    RayMask neg = 0;
    LinearSystem region;
  };

  Node root() const { return {0, 0, LinearSystem(x_.dim())}; }

  /// Children of a node that survive pruning.
  std::vector<Node> expand(const Node& node) const {
    std::vector<Node> out;
    const RayIndex r = node.next;
    const RayMask assigned = (RayMask{1} << (r + 1)) - 1;
    for (bool is_neg : {true, false}) {
      const RayMask neg = node.neg | (is_neg ? RayMask{1} << r : 0);
      if (!compatible(neg, assigned)) continue;
      Node child{r + 1, neg, node.region};
      if (is_neg) child.region.add_le(x_.ray(r), -d_.coeffs[r] - 1);
      else child.region.add_ge(x_.ray(r), -d_.coeffs[r]);
      if (!feasible(child.region)) continue;
      out.push_back(std::move(child));
    }
    return out;
  }

  bool is_leaf(const Node& node) const { return node.next == x_.num_rays(); }

  void collect(const Node& node, std::vector<WeightPattern>& out) const {
    if (is_leaf(node)) {
      if (auto p = evaluate(node)) out.push_back(std::move(*p));
      return;
    }
    for (const auto& child : expand(node)) collect(child, out);
  }

 private:
  bool compatible(RayMask neg, RayMask assigned) const {
    return std::any_of(carriers_.begin(), carriers_.end(),
                       [&](const Carrier& c) { return (c.mask & assigned) == neg; });
  }

  std::optional<WeightPattern> evaluate(const Node& node) const {
    auto it = std::find_if(carriers_.begin(), carriers_.end(), [&](const Carrier& c) { return c.mask == node.neg; });
    if (it == carriers_.end()) return std::nullopt;
    if (!is_bounded(node.region))
      throw InfiniteCohomology("cohomology: unbounded weight region carries cohomology (fan not complete?)");
    WeightPattern p;
    p.neg = node.neg;
    p.region = node.region;
    p.reduced = it->degree;
    p.points = count_lattice_points(node.region);
    if (p.points == 0) return std::nullopt;
    return p;
  }

  const Variety& x_;
  const TorusDivisor& d_;
  const std::vector<Carrier>& carriers_;
};

CohomologyVector assemble(const Variety& x, std::vector<WeightPattern> patterns) {
  std::sort(patterns.begin(), patterns.end(),
            [](const WeightPattern& a, const WeightPattern& b) { return a.neg < b.neg; });
  CohomologyVector v;
  v.h.assign(x.dim() + 1, Integer(0));
  for (const auto& p : patterns)
    for (std::size_t i = 0; i < p.reduced.size() && i < v.h.size(); ++i) v.h[i] += p.points * p.reduced[i];
  v.patterns = std::move(patterns);
  return v;
}

void check_divisor(const Variety& x, const TorusDivisor& d) {
  if (d.coeffs.size() != x.num_rays()) throw std::invalid_argument("cohomology: divisor has wrong length");
}

}  // namespace

CohomologyVector cohomology_serial(const Variety& x, const TorusDivisor& d) {
  check_divisor(x, d);
  PatternSearch search(x, d);
  std::vector<WeightPattern> patterns;
  search.collect(search.root(), patterns);
  return assemble(x, std::move(patterns));
}

CohomologyVector cohomology(const Variety& x, const TorusDivisor& d) {
  check_divisor(x, d);
  PatternSearch search(x, d);
  // Breadth-first to a shallow frontier, then independent subtrees.
  std::vector<PatternSearch::Node> frontier{search.root()};
  const std::size_t depth = std::min<std::size_t>(3, x.num_rays());
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<PatternSearch::Node> next;
    for (const auto& node : frontier)
      for (auto& child : search.expand(node)) next.push_back(std::move(child));
    frontier = std::move(next);
  }
  std::vector<std::vector<WeightPattern>> parts(frontier.size());
  const auto count = static_cast<long long>(frontier.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      search.collect(frontier[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(toric_cohomology_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::vector<WeightPattern> patterns;
  for (auto& part : parts)
    for (auto& p : part) patterns.push_back(std::move(p));
  return assemble(x, std::move(patterns));
}

CohomologyVector ext_dims(const Variety& x, const DivisorClass& l, const DivisorClass& m) {
  return cohomology(x, x.representative(m) - x.representative(l));
}

Integer euler_chi(const Variety& x, const DivisorClass& l, const DivisorClass& m) {
  return ext_dims(x, l, m).euler();
}

}  // namespace toric
