#pragma once

#include <map>
#include <set>
#include <vector>

#include "planarforge/plane_graph.hpp"

namespace planarforge {

struct CutCensus {
    std::set<VertexId> cut_vertices;
    std::set<std::pair<VertexId, VertexId>> separation_pairs;  // ordered (a < b)

    int num_1cuts() const { return static_cast<int>(cut_vertices.size()); }
    int num_2cuts() const { return static_cast<int>(separation_pairs.size()); }
};

struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks;  // edge sets, deterministic order
    std::map<VertexId, std::vector<int>> cut_vertex_incidence;
};

bool is_connected(const PlaneGraph& g);

/// Exhaustive k-cut census for k in {1,2}: every vertex and vertex pair whose
/// removal disconnects the remainder. Lowpoint-based; equivalent to the
/// brute-force enumeration (cut_census_bruteforce) and cross-checked against
/// it in the tests. Throws Disconnected.
CutCensus cut_census(const PlaneGraph& g);

/// Literal O(V^2 (V+E)) removal oracle; independent of cut_census.
CutCensus cut_census_bruteforce(const PlaneGraph& g);

bool is_biconnected(const PlaneGraph& g);

/// Census-based; requires V >= 4 (throws TooSmall) and a connected input.
bool is_triconnected(const PlaneGraph& g);

/// Adds an apex joined to every distinct outer-face vertex, then tests
/// 3-connectivity. `outer` designates the outer face by any dart on it; if
/// absent the graph's stored outer face is used. Throws NotBiconnected.
bool is_internally_triconnected(const PlaneGraph& g, std::optional<Dart> outer = std::nullopt);

BlockDecomposition blocks(const PlaneGraph& g);

}  // namespace planarforge
