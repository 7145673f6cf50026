#include "toric/cones.hpp"

namespace toric {

NefVerdict is_nef(const Variety& x, const TorusDivisor& d) {
  NefVerdict v;
  v.cls = divisor_class(x, d);
  const CartierData data = cartier_data(x, d);
  bool strict = true;
  for (std::size_t c = 0; c < x.num_cones(); ++c) {
    const RayMask cone = x.cone_masks()[c];
    for (RayIndex r = 0; r < x.num_rays(); ++r) {
      if (cone >> r & 1) continue;
      const int s = cmp(dot(data.m[c], x.ray(r)), -d.coeffs[r]);
      if (s < 0) {
        v.failing = {c, r};
        return v;
      }
      if (s == 0 && strict) {
        strict = false;
        v.tight = {c, r};
      }
    }
  }
  v.is_nef = true;
  v.is_ample = strict;
  return v;
}

bool is_antinef(const Variety& x, const TorusDivisor& d) { return is_nef(x, -d).is_nef; }

std::vector<DivisorClass> bu_set(const Variety& x, const FrobSet& frob) {
  std::vector<DivisorClass> out;
  for (const auto& e : frob.entries)
    if (is_antinef(x, e.divisor)) out.push_back(e.cls);
  return out;  // entries are already sorted by class
}

std::vector<DivisorClass> bu_set(const Variety& x) { return bu_set(x, frob_set(x)); }

std::string to_string(FanoStatus s) {
  switch (s) {
    case FanoStatus::Fano: return "fano";
    case FanoStatus::NefFano: return "nef_fano";
    case FanoStatus::Neither: return "neither";
  }
  return "neither";
}

FanoStatus nef_fano_status(const Variety& x) {
  const NefVerdict v = is_nef(x, -canonical_divisor(x));
  if (v.is_ample) return FanoStatus::Fano;
  if (v.is_nef) return FanoStatus::NefFano;
  return FanoStatus::Neither;
}

}  // namespace toric
