#ifndef DETOUR_PATH_DP_HPP
#define DETOUR_PATH_DP_HPP

#include <optional>

#include "detour/graph.hpp"
#include "detour/treewidth.hpp"

namespace detour {

// Longest (s,t)-path by dynamic programming over the given tree
// decomposition; time exponential only in the decomposition width. The
// decomposition is revalidated and converted to a nice form internally; s and
// t ride along in every DP state as mandatory degree<=1 vertices. Returns
// nullopt when t is unreachable from s.
std::optional<Path> longest_st_path(const Graph& g, const TreeDecomposition& td,
                                    Vertex s, Vertex t);

} // namespace detour

#endif
