#pragma once

#include <utility>
#include <vector>

#include "edgesim/graph.hpp"

namespace edgesim::testing {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

inline Graph triangle() { return Graph::from_edges(3, EdgeList{{0, 1}, {1, 2}, {0, 2}}); }

inline Graph path3() { return Graph::from_edges(3, EdgeList{{0, 1}, {1, 2}}); }

inline Graph k4() {
  return Graph::from_edges(4, EdgeList{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// center 0 with leaves 1..3
inline Graph star4() { return Graph::from_edges(4, EdgeList{{0, 1}, {0, 2}, {0, 3}}); }

// two degree-3 hubs joined by an edge, no common neighbors
inline Graph two_hubs() {
  return Graph::from_edges(6, EdgeList{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

// K4 on {1,2,3,4} plus node 0 adjacent to 1 and 2
inline Graph k4_plus_pendant_pair() {
  return Graph::from_edges(
      5, EdgeList{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {0, 1}, {0, 2}});
}

// triangles {0,1,2} and {3,4,5} joined by the bridge 2-3
inline Graph two_triangles_bridge() {
  return Graph::from_edges(6, EdgeList{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

// complete bipartite K2,2: sides {0,1} and {2,3}
inline Graph k22() { return Graph::from_edges(4, EdgeList{{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// one edge plus an isolated node 2
inline Graph edge_plus_isolated() { return Graph::from_edges(3, EdgeList{{0, 1}}); }

}  // namespace edgesim::testing
