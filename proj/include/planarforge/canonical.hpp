#pragma once

#include <string>
#include <vector>

#include "planarforge/plane_graph.hpp"

namespace planarforge {

/// Ordered path partition pi = (P_1,...,P_k) of a 3-connected plane graph,
/// with P_1 = (v1, v2) and P_k = (vn).
struct CanonicalOrdering {
    std::vector<std::vector<VertexId>> parts;
    VertexId v1 = -1, v2 = -1, vn = -1;
};

/// Computes a canonical ordering of a simple 3-connected embedded graph whose
/// outer face is designated by `outer`. v1, v2, vn must lie on the outer face
/// with v2, v1, vn in clockwise order along it and (v1,v2) an edge.
/// Throws NotTriconnected / AnchorsNotOnOuterFace / AnchorsNotClockwise /
/// NoCanonicalOrdering.
CanonicalOrdering canonical_ordering(const PlaneGraph& g3, Dart outer, VertexId v1, VertexId v2,
                                     VertexId vn);

/// Outer cycle (in walk order) of the induced embedded subgraph on S, with
/// the outer face inherited from the host's. nullopt when the induced graph
/// is not a valid embedding or its boundary is not a simple cycle.
std::optional<std::vector<VertexId>> induced_outer_cycle(const PlaneGraph& g,
                                                         const std::set<VertexId>& S, Dart outer);

/// Same boundary as induced_outer_cycle but as the dart walk.
std::optional<std::vector<Dart>> induced_outer_walk(const PlaneGraph& g,
                                                    const std::set<VertexId>& S, Dart outer);

struct CanonicalReport {
    bool valid = false;
    std::vector<std::string> violations;
};

/// Checks every condition of the definition literally, including the chain
/// observation that the two boundary neighbours of a chain are adjacent.
CanonicalReport validate_canonical_ordering(const PlaneGraph& g3, Dart outer,
                                            const CanonicalOrdering& pi);

}  // namespace planarforge
