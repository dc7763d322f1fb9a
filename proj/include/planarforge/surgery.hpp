#pragma once

#include <map>
#include <optional>
#include <vector>

#include "planarforge/plane_graph.hpp"

namespace planarforge {

/// Record of one H-split: edges e1, e2 were subdivided by new_v1, new_v2 and
/// the bridge cross_edge = (new_v1, new_v2) was added inside their shared
/// face. halves[i] are the two edges replacing e_i, tail-side first.
struct HSplitRecord {
    EdgeId e1 = -1, e2 = -1;
    VertexId new_v1 = -1, new_v2 = -1;
    EdgeId cross_edge = -1;
    std::pair<EdgeId, EdgeId> halves1{-1, -1};
    std::pair<EdgeId, EdgeId> halves2{-1, -1};
};

struct SubdivideResult {
    PlaneGraph graph;
    std::vector<VertexId> new_vertices;  // in order along the edge
    std::vector<EdgeId> segments;        // t+1 segment edges, u-side first
};

/// Replaces e=(u,v) by a path with t internal vertices. t=0 returns the
/// graph unchanged.
SubdivideResult subdivide_edge(const PlaneGraph& g, EdgeId e, int t);

/// In-place variant used by the surgery layer itself.
void subdivide_edge_inplace(PlaneGraph& g, EdgeId e, int t,
                            std::vector<VertexId>* new_vertices,
                            std::vector<EdgeId>* segments);

/// Inserts edge (corner_u.tail, corner_v.tail) splitting the face that both
/// corner darts lie on. A corner is named by its departing dart; the new edge
/// is inserted immediately before that dart's edge in the clockwise rotation.
EdgeId insert_edge_in_face(PlaneGraph& g, Dart corner_u, Dart corner_v);

/// H-split on the pair <e1, e2>, which must be distinct and share a face.
/// The face and darts are chosen canonically (first shared face in face
/// order, first darts along its walk).
std::pair<PlaneGraph, HSplitRecord> h_split(const PlaneGraph& g, EdgeId e1, EdgeId e2);

/// H-split with the shared face fixed by explicit darts d1, d2 that must lie
/// on one face walk, d2 strictly after d1.
HSplitRecord h_split_at(PlaneGraph& g, Dart d1, Dart d2);

/// Planar gadget with four attachment vertices on its outer face, in the
/// cyclic order matching the host face walk (tail e1, head e1, tail e2,
/// head e2).
struct PairGadget {
    PlaneGraph graph;
    std::array<VertexId, 4> attach{-1, -1, -1, -1};
};

struct SubstituteResult {
    PlaneGraph graph;
    /// gadget vertex id -> host vertex id (attachments map to host endpoints)
    std::map<VertexId, VertexId> vertex_map;
    /// gadget edge id -> host edge id
    std::map<EdgeId, EdgeId> edge_map;
};

/// Replaces the pair <e1, e2> by the gadget: e1, e2 are deleted, the gadget's
/// attachment vertices are identified with the endpoints in face-walk order.
/// Throws NoSharedFace / AttachmentOrderIncompatible (planarity re-check).
SubstituteResult substitute_pair(const PlaneGraph& g, EdgeId e1, EdgeId e2,
                                 const PairGadget& gadget);

/// Smooths out every degree-2 vertex not in `keep`, concatenating its two
/// incident edges. Returns nullopt if a loop would arise. Parallel edges in
/// the result are allowed.
std::optional<PlaneGraph> suppress_degree2(const PlaneGraph& g,
                                           const std::set<VertexId>& keep);

/// Renames vertices to 0..V-1 and edges to 0..E-1 preserving relative id
/// order; required before canonical serialization.
struct NormalizeResult {
    PlaneGraph graph;
    std::map<VertexId, VertexId> vertex_map;  // old -> new
    std::map<EdgeId, EdgeId> edge_map;
};
NormalizeResult normalize_ids(const PlaneGraph& g);

/// Splices `child` into g at a shared virtual edge: g's slot for the edge is
/// replaced by the child's rotation arcs (the child still contains the edge,
/// same id and endpoints). Interior ids must not collide with g's.
void splice_expansion(PlaneGraph& g, EdgeId virtual_edge, const PlaneGraph& child);

/// Disjoint copy of `src` into `dst` with fresh ids; returns the id maps.
struct CopyMaps {
    std::map<VertexId, VertexId> vertex_map;
    std::map<EdgeId, EdgeId> edge_map;
};
CopyMaps copy_into(PlaneGraph& dst, const PlaneGraph& src);

}  // namespace planarforge
