#include "toric/frobenius.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toric {

FrobSummand frobenius_summand(const Variety& x, const TorusDivisor& d, unsigned long ell,
                              std::span<const Integer> residue) {
  if (ell == 0) throw std::invalid_argument("frobenius_summand: ell must be positive");
  if (residue.size() != x.dim()) throw std::invalid_argument("frobenius_summand: residue has wrong length");
  if (d.coeffs.size() != x.num_rays()) throw std::invalid_argument("frobenius_summand: divisor has wrong length");
  const Integer l(ell);
  FrobSummand s;
  s.residue.assign(residue.begin(), residue.end());
  s.ell = ell;
  s.divisor.coeffs.reserve(x.num_rays());
  for (std::size_t r = 0; r < x.num_rays(); ++r)
    s.divisor.coeffs.push_back(floor_div(d.coeffs[r] + dot(residue, x.ray(r)), l));
  s.cls = divisor_class(x, s.divisor);
  return s;
}

namespace {

IntVec residue_of(std::size_t index, std::size_t n, unsigned long ell) {
  IntVec u(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = static_cast<unsigned long>(index % ell);
    index /= ell;
  }
  return u;
}

std::size_t residue_count(std::size_t n, unsigned long ell) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > (std::size_t{1} << 40) / ell) throw std::length_error("pushforward_summands: ell^n too large");
    total *= ell;
  }
  return total;
}

}  // namespace

std::vector<DivisorClass> pushforward_summands_serial(const Variety& x, const TorusDivisor& d,
                                                      unsigned long ell) {
  if (ell == 0) throw std::invalid_argument("pushforward_summands: ell must be positive");
  const std::size_t n = x.dim();
  std::vector<DivisorClass> out;
  IntVec u(n, Integer(0));
  for (;;) {
    out.push_back(frobenius_summand(x, d, ell, u).cls);
    std::size_t i = 0;
    while (i < n && u[i] == ell - 1) u[i++] = 0;
    if (i == n) break;
    ++u[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> pushforward_summands(const Variety& x, const TorusDivisor& d, unsigned long ell) {
  if (ell == 0) throw std::invalid_argument("pushforward_summands: ell must be positive");
  const std::size_t n = x.dim();
  const std::size_t total = residue_count(n, ell);
  std::vector<DivisorClass> out(total);
  const auto count = static_cast<long long>(total);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] =
        frobenius_summand(x, d, ell, residue_of(static_cast<std::size_t>(i), n, ell)).cls;
  std::sort(out.begin(), out.end());
  return out;
}

std::map<DivisorClass, std::size_t> tally(const std::vector<DivisorClass>& summands) {
  std::map<DivisorClass, std::size_t> m;
  for (const auto& c : summands) ++m[c];
  return m;
}

bool FrobSet::contains(const DivisorClass& c) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), c,
                             [](const FrobEntry& e, const DivisorClass& k) { return e.cls < k; });
  return it != entries.end() && it->cls == c;
}

std::vector<DivisorClass> FrobSet::classes() const {
  std::vector<DivisorClass> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.cls);
  return out;
}

// ---------------------------------------------------------------------------
// chamber search

namespace {

LinearSystem unit_cube(std::size_t n) {
  LinearSystem s(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Integer(0));
    e[i] = 1;
    s.add_ge(e, 0);
    s.add_lt(e, 1);
  }
  return s;
}

struct ChamberSearch {
  const Variety& x;
  std::vector<FrobEntry> found;  // in DFS order

  void descend(const LinearSystem& region, TorusDivisor& b, std::size_t ray) {
    if (ray == x.num_rays()) {
      FrobEntry e;
      e.cls = divisor_class(x, b);
      e.divisor = b;
      e.chamber = region;
      e.witness = *find_point(region);
      found.push_back(std::move(e));
      return;
    }
    auto [lo, hi] = candidate_range(region, ray);
    for (Integer v = lo; v <= hi; ++v) {
      LinearSystem next = region;
      next.add_ge(x.ray(ray), v);
      next.add_lt(x.ray(ray), v + 1);
      if (!feasible(next)) continue;
      b.coeffs[ray] = v;
      descend(next, b, ray + 1);
    }
  }

  std::pair<Integer, Integer> candidate_range(const LinearSystem& region, std::size_t ray) const {
    RatVec obj;
    for (const auto& c : x.ray(ray)) obj.emplace_back(c);
    auto up = maximize_relaxed(region, obj);
    for (auto& c : obj) c = -c;
    auto down = maximize_relaxed(region, obj);
    return {floor_of(-*down), floor_of(*up)};
  }
};

std::vector<FrobEntry> dedupe(std::vector<FrobEntry> found) {
  std::vector<FrobEntry> out;
  std::set<DivisorClass> seen;
  for (auto& e : found)
    if (seen.insert(e.cls).second) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(), [](const FrobEntry& a, const FrobEntry& b) { return a.cls < b.cls; });
  return out;
}

}  // namespace

FrobSet frob_set(const Variety& x) {
  const std::size_t n = x.dim();
  const LinearSystem cube = unit_cube(n);

  // Split the search at the first ray; branches run independently and are
  // concatenated in order so the chosen representative is deterministic.
  ChamberSearch root{x, {}};
  auto [lo, hi] = root.candidate_range(cube, 0);
  std::vector<Integer> firsts;
  for (Integer v = lo; v <= hi; ++v) firsts.push_back(v);
  std::vector<std::vector<FrobEntry>> branches(firsts.size());
  const auto count = static_cast<long long>(firsts.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    LinearSystem region = cube;
    region.add_ge(x.ray(0), firsts[k]);
    region.add_lt(x.ray(0), firsts[k] + 1);
    if (!feasible(region)) continue;
    ChamberSearch search{x, {}};
    TorusDivisor b = x.zero_divisor();
    b.coeffs[0] = firsts[k];
    search.descend(region, b, 1);
    branches[k] = std::move(search.found);
  }
  std::vector<FrobEntry> all;
  for (auto& br : branches)
    for (auto& e : br) all.push_back(std::move(e));

  FrobSet fs;
  fs.entries = dedupe(std::move(all));

  // Any common multiple of the witness denominators realizes every class.
  Integer cap = 1;
  for (const auto& e : fs.entries)
    for (const auto& t : e.witness) mpz_lcm(cap.get_mpz_t(), cap.get_mpz_t(), t.get_den_mpz_t());
  if (!cap.fits_ulong_p()) throw std::length_error("frob_set: stabilizing bound too large");

  const TorusDivisor zero = x.zero_divisor();
  std::size_t seen = 0;
  for (unsigned long ell = 1; ell <= cap.get_ui(); ++ell) {
    std::set<DivisorClass> present;
    for (auto& c : pushforward_summands(x, zero, ell)) present.insert(std::move(c));
    for (const auto& c : present) {
      auto it = std::lower_bound(fs.entries.begin(), fs.entries.end(), c,
                                 [](const FrobEntry& e, const DivisorClass& k) { return e.cls < k; });
      if (it == fs.entries.end() || it->cls != c)
        throw std::logic_error("frob_set: summand outside the chamber enumeration");
      if (it->min_ell == 0) {
        it->min_ell = ell;
        ++seen;
      }
    }
    if (present.size() == fs.entries.size()) {
      fs.stabilizing_ell = ell;
      break;
    }
  }
  if (fs.stabilizing_ell == 0 || seen != fs.entries.size())
    throw std::logic_error("frob_set: stabilization sweep did not terminate");
  return fs;
}

unsigned long minimal_stabilizing_ell(const Variety& x) { return frob_set(x).stabilizing_ell; }

}  // namespace toric
