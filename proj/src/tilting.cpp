#include "toric/tilting.hpp"

#include <algorithm>
#include <exception>
#include <functional>

namespace toric {

namespace {

template <typename Cohomology>
TiltingCandidate assemble_candidate(const Variety& x, const std::vector<DivisorClass>& summands,
                                    Cohomology&& coh, bool parallel) {
  const std::size_t k = summands.size();
  TiltingCandidate c;
  c.summands = summands;
  c.ext.assign(k, std::vector<std::vector<Integer>>(k));
  c.gram = IntMat(k, k);
  std::vector<TorusDivisor> reps;
  for (const auto& s : summands) reps.push_back(x.representative(s));
  const auto cells = static_cast<long long>(k * k);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long idx = 0; idx < cells; ++idx) {
    const auto a = static_cast<std::size_t>(idx) / k;
    const auto b = static_cast<std::size_t>(idx) % k;
    try {
      CohomologyVector v = coh(x, reps[b] - reps[a]);
      c.gram(a, b) = v.euler();
      c.ext[a][b] = std::move(v.h);
    } catch (...) {
#pragma omp critical(toric_tilting_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return c;
}

}  // namespace

TiltingCandidate build_candidate(const Variety& x, const std::vector<DivisorClass>& summands) {
  return assemble_candidate(
      x, summands, [](const Variety& v, const TorusDivisor& d) { return cohomology(v, d); }, true);
}

TiltingCandidate build_candidate_serial(const Variety& x, const std::vector<DivisorClass>& summands) {
  return assemble_candidate(
      x, summands, [](const Variety& v, const TorusDivisor& d) { return cohomology_serial(v, d); }, false);
}

TiltingCandidate build_candidate(const Variety& x) { return build_candidate(x, bu_set(x)); }

ExtVanishing ext_vanishing(const TiltingCandidate& c) {
  ExtVanishing out;
  for (std::size_t a = 0; a < c.summands.size(); ++a)
    for (std::size_t b = 0; b < c.summands.size(); ++b)
      for (std::size_t i = 1; i < c.ext[a][b].size(); ++i)
        if (c.ext[a][b][i] != 0) {
          out.ok = false;
          out.witnesses.push_back({a, b, i, c.ext[a][b][i]});
        }
  return out;
}

std::size_t m0(const Variety& x, const TiltingCandidate& c) {
  const std::size_t k = c.summands.size();
  const TorusDivisor anti = -canonical_divisor(x);
  std::vector<TorusDivisor> reps;
  for (const auto& s : c.summands) reps.push_back(x.representative(s));
  std::vector<std::vector<Integer>> h(k * k);
  const auto cells = static_cast<long long>(k * k);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < cells; ++idx) {
    const auto a = static_cast<std::size_t>(idx) / k;
    const auto b = static_cast<std::size_t>(idx) % k;
    try {
      h[static_cast<std::size_t>(idx)] = cohomology(x, reps[b] - reps[a] + anti).h;
    } catch (...) {
#pragma omp critical(toric_m0_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::optional<std::size_t> top;
  for (const auto& v : h)
    for (std::size_t m = 0; m < v.size(); ++m)
      if (v[m] != 0 && (!top || m > *top)) top = m;
  if (!top) throw std::logic_error("m0: Hom(T, T(-K)) vanishes in every degree");
  return *top;
}

std::optional<std::vector<std::size_t>> gram_triangular_order(const IntMat& gram) {
  const std::size_t k = gram.rows();
  // edge a -> b when chi(L_a, L_b) != 0; upper triangular order = topological order
  std::vector<std::size_t> indegree(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (a != b && gram(a, b) != 0) ++indegree[b];
  std::vector<std::size_t> order;
  std::vector<bool> placed(k, false);
  while (order.size() < k) {
    std::size_t pick = k;
    for (std::size_t v = 0; v < k; ++v)
      if (!placed[v] && indegree[v] == 0) {
        pick = v;
        break;
      }
    if (pick == k) return std::nullopt;
    placed[pick] = true;
    order.push_back(pick);
    for (std::size_t b = 0; b < k; ++b)
      if (b != pick && gram(pick, b) != 0) --indegree[b];
  }
  return order;
}

std::string to_string(OrlovStatus s) {
  switch (s) {
    case OrlovStatus::VerifiedModuloFullness: return "VERIFIED_MODULO_FULLNESS";
    case OrlovStatus::HypothesisFailed: return "HYPOTHESIS_FAILED";
    case OrlovStatus::NotApplicable: return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

OrlovReport orlov_check(const Variety& x) {
  OrlovReport r;
  r.name = x.name();
  r.dim = x.dim();
  r.max_cones = x.num_cones();

  const FrobSet frob = frob_set(x);
  r.frob_count = frob.size();
  r.stabilizing_ell = frob.stabilizing_ell;
  r.bu = bu_set(x, frob);
  r.bu_count = r.bu.size();

  r.fano = nef_fano_status(x);
  r.anticanonical_nef = r.fano != FanoStatus::Neither;

  const TiltingCandidate cand = build_candidate(x, r.bu);
  const ExtVanishing ev = ext_vanishing(cand);
  r.ext_vanishing = ev.ok;
  r.ext_witnesses = ev.witnesses;
  r.k_rank_match = r.bu_count == r.max_cones;
  r.gram_det = determinant(cand.gram);
  r.gram_unimodular = abs(r.gram_det) == 1;
  r.gram_order = gram_triangular_order(cand.gram);

  r.m0 = m0(x, cand);
  r.rdim_lower = r.dim;
  r.gen_time_upper = r.dim + r.m0;

  if (!r.anticanonical_nef) {
    r.status = OrlovStatus::NotApplicable;
    r.reason = "-K not nef";
  } else if (!r.ext_vanishing) {
    r.status = OrlovStatus::HypothesisFailed;
    r.reason = "Ext vanishing fails";
  } else if (r.m0 != 0) {
    r.status = OrlovStatus::HypothesisFailed;
    r.reason = "m0 > 0";
  } else {
    r.status = OrlovStatus::VerifiedModuloFullness;
  }
  return r;
}

ChainCheck projection_chain_check(const Variety& x, const std::vector<DivisorClass>& lines, unsigned long ell) {
  ChainCheck out;
  const TorusDivisor k = canonical_divisor(x);
  const std::vector<DivisorClass> summands = pushforward_summands(x, x.zero_divisor(), ell);
  const auto multiplicity = tally(summands);
  for (const auto& line : lines) {
    const TorusDivisor l = x.representative(line);
    std::vector<Integer> lhs(x.dim() + 1, Integer(0));
    for (const auto& [b, mult] : multiplicity) {
      const CohomologyVector v = cohomology(x, x.representative(b) - l - k);
      for (std::size_t m = 0; m < lhs.size(); ++m) lhs[m] += Integer(static_cast<unsigned long>(mult)) * v.h[m];
    }
    const CohomologyVector rhs = cohomology(x, Integer(-static_cast<long>(ell)) * (l + k));
    for (std::size_t m = 0; m < lhs.size(); ++m)
      if (lhs[m] != rhs.h[m]) {
        out.ok = false;
        out.violation = ChainViolation{line, ell, m, lhs[m], rhs.h[m]};
        return out;
      }
  }
  return out;
}

ChainCheck projection_chain_check(const Variety& x, unsigned long ell) {
  return projection_chain_check(x, frob_set(x).classes(), ell);
}

}  // namespace toric
