#pragma once

#include "toric/fan.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace toric {

/// Reduced rational cohomology of the subcomplex of the nerve (faces = subsets
/// of the given maximal simplices) induced on `vertices`.
/// Entry p of the result is rank H~^{p-1}; the result has max_faces_size + 1
/// entries, so the empty complex yields {1, 0, ...}.
std::vector<std::size_t> reduced_cohomology_ranks(std::span<const RayMask> max_simplices,
                                                  RayMask vertices, std::size_t max_face_size);

}  // namespace toric
