#include "toric/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace toric {

std::vector<std::size_t> reduced_cohomology_ranks(std::span<const RayMask> max_simplices,
                                                  RayMask vertices, std::size_t max_face_size) {
  // faces[k] = faces with k vertices (k = 0 is the empty face)
  std::vector<std::vector<RayMask>> faces(max_face_size + 1);
  std::vector<RayMask> all;
  for (RayMask cone : max_simplices) {
    const RayMask top = cone & vertices;
    // enumerate all submasks of top, including 0
    RayMask sub = top;
    for (;;) {
      all.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & top;
    }
  }
  if (all.empty()) all.push_back(0);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (RayMask f : all) {
    const auto k = static_cast<std::size_t>(std::popcount(f));
    if (k <= max_face_size) faces[k].push_back(f);
  }

  // rank of boundary d_k : C(k vertices) -> C(k-1 vertices), k >= 1
  std::vector<std::size_t> bd_rank(max_face_size + 2, 0);
  for (std::size_t k = 1; k <= max_face_size; ++k) {
    if (faces[k].empty() || faces[k - 1].empty()) continue;
    std::unordered_map<RayMask, std::size_t> index;
    for (std::size_t i = 0; i < faces[k - 1].size(); ++i) index[faces[k - 1][i]] = i;
    IntMat bd(faces[k].size(), faces[k - 1].size());
    for (std::size_t r = 0; r < faces[k].size(); ++r) {
      const RayMask f = faces[k][r];
      int sign = 1;
      for (RayMask rest = f; rest; rest &= rest - 1) {
        const RayMask bit = rest & (~rest + 1);
        bd(r, index.at(f & ~bit)) = sign;
        sign = -sign;
      }
    }
    bd_rank[k] = rank(bd);
  }

  std::vector<std::size_t> out(max_face_size + 1, 0);
  for (std::size_t k = 0; k <= max_face_size; ++k)
    out[k] = faces[k].size() - bd_rank[k] - bd_rank[k + 1];
  return out;
}

}  // namespace toric
