#pragma once

#include <vector>

#include "hyperbound/polytope.hpp"

namespace hyperbound {

// Hull vertices for d <= 3 computed without the double description code:
// endpoints in d = 1, gift wrapping in d = 2, and in d = 3 a point is dropped
// when it lies in a segment, triangle or tetrahedron spanned by the others.
// Sorted lexicographically.
std::vector<Vector> reference_hull_vertices(std::vector<Vector> points);

}  // namespace hyperbound
