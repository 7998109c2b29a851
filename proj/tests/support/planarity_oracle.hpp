#pragma once

#include <utility>
#include <vector>

namespace testsupport {

/// Independent exact planarity check used to verify the library's
/// Boyer-Myrvold-backed test: Demoucron-Malgrange-Pertuiset face embedding
/// run per biconnected block. Quadratic, intended for small test graphs.
bool dmp_is_planar(int n_vertices, const std::vector<std::pair<int, int>>& edges);

} // namespace testsupport
