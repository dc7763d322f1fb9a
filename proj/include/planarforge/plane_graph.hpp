#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planarforge {

using VertexId = int;
using EdgeId = int;

/// A directed edge side: `edge` traversed away from `tail`.
struct Dart {
    EdgeId edge = -1;
    VertexId tail = -1;

    friend bool operator==(const Dart& a, const Dart& b) {
        return a.edge == b.edge && a.tail == b.tail;
    }
    friend bool operator!=(const Dart& a, const Dart& b) { return !(a == b); }
    friend bool operator<(const Dart& a, const Dart& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.tail < b.tail;
    }
};

enum class Err {
    InconsistentRotation,
    NotPlanarEmbedding,
    NoSharedFace,
    SameEdge,
    Disconnected,
    TooSmall,
    NotBiconnected,
    NotTriconnected,
    AnchorsNotOnOuterFace,
    AnchorsNotClockwise,
    IsParentEdge,
    AttachmentOrderIncompatible,
    EdgeNotOnOuterFace,
    AdjacentQChildren,
    MultipleQChildren,
    NoCanonicalOrdering,
    MinDegreeTooLow,
    NoRNodeAdjacentRoot,
    NotCubic,
    NotFourRegular,
    NotMaxDegree3,
    FaceTooSmall,
    NotCutVertex,
    ChainTooShort,
    GadgetContractViolated,
    BudgetExceeded,
    GenerationFailed,
    ParseError,
    ClaimFailed,
    Internal,
};

const char* err_name(Err e);

class GraphError : public std::runtime_error {
  public:
    GraphError(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

  private:
    Err code_;
};

/// Directed boundary walk of one face; walk[i] leads from walk[i].tail to
/// walk[i+1].tail along walk[i].edge.
struct Face {
    std::vector<Dart> walk;

    int size() const { return static_cast<int>(walk.size()); }
    bool contains_edge(EdgeId e) const {
        for (const Dart& d : walk)
            if (d.edge == e) return true;
        return false;
    }
    bool contains_vertex(VertexId v) const {
        for (const Dart& d : walk)
            if (d.tail == v) return true;
        return false;
    }
};

/// Embedded planar multigraph. The embedding is a clockwise rotation system;
/// loops are not supported, parallel edges are. Face walks follow the
/// clockwise successor at each dart's head.
///
/// Mutators are building blocks for the surgery layer; pipeline code treats
/// constructed graphs as immutable values and copies before editing.
class PlaneGraph {
  public:
    PlaneGraph() = default;

    /// Validates rotation consistency and, per connected component, the Euler
    /// face count. Throws InconsistentRotation / NotPlanarEmbedding.
    static PlaneGraph build(const std::vector<VertexId>& vertices,
                            const std::map<EdgeId, std::pair<VertexId, VertexId>>& edges,
                            const std::map<VertexId, std::vector<EdgeId>>& rotation);

    // -- accessors ---------------------------------------------------------

    bool has_vertex(VertexId v) const { return rot_.count(v) != 0; }
    bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
    int num_vertices() const { return static_cast<int>(rot_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    std::vector<VertexId> vertices() const;
    std::vector<EdgeId> edge_ids() const;

    const std::pair<VertexId, VertexId>& endpoints(EdgeId e) const;
    const std::vector<EdgeId>& rotation(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(rotation(v).size()); }

    VertexId other_end(EdgeId e, VertexId v) const;
    Dart dart(EdgeId e, VertexId tail) const;
    Dart reversed(Dart d) const { return dart(d.edge, head(d)); }
    VertexId head(Dart d) const { return other_end(d.edge, d.tail); }

    /// Edge between u and v if one exists (lowest id wins on parallels).
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    /// Next dart of the face walk: clockwise successor at head(d).
    Dart next_dart(Dart d) const;

    const std::vector<Face>& faces() const;
    /// Index into faces() of the face whose walk contains d.
    int face_of(Dart d) const;

    std::optional<Dart> outer_dart() const { return outer_; }
    void set_outer(std::optional<Dart> d);
    /// Face index of the outer face, if set.
    std::optional<int> outer_face_index() const;

    bool is_connected() const;
    /// V - E + F == 1 + #components (sphere embedding per component).
    bool euler_ok() const;
    void validate() const;  // throws on inconsistency

    /// Structural equality: vertex set, edges with ordered endpoints,
    /// rotations, and outer face designation.
    friend bool operator==(const PlaneGraph& a, const PlaneGraph& b);
    friend bool operator!=(const PlaneGraph& a, const PlaneGraph& b) { return !(a == b); }

    // -- mutators (surgery layer) ------------------------------------------

    VertexId add_vertex();                 // fresh id
    void add_vertex_with_id(VertexId v);   // explicit id, must be fresh
    /// Appends e at the end of both endpoint rotations.
    EdgeId add_edge(VertexId u, VertexId v);
    void add_edge_with_id(EdgeId e, VertexId u, VertexId v);
    /// Inserts e into rot(u) directly before `before_u` and into rot(v)
    /// before `before_v` (append when the anchor is -1).
    EdgeId add_edge_before(VertexId u, VertexId v, EdgeId before_u, EdgeId before_v);
    void add_edge_with_id_before(EdgeId e, VertexId u, VertexId v, EdgeId before_u,
                                 EdgeId before_v);
    void remove_edge(EdgeId e);
    void remove_vertex(VertexId v);  // must be isolated
    void set_rotation(VertexId v, const std::vector<EdgeId>& order);
    /// Replaces old_e by new_e in rot(v) (same position).
    void replace_in_rotation(VertexId v, EdgeId old_e, EdgeId new_e);
    /// Mirror image: reverses every rotation.
    void flip();

    VertexId fresh_vertex_id() const { return next_v_; }
    EdgeId fresh_edge_id() const { return next_e_; }
    void reserve_ids(VertexId v, EdgeId e);  // bump fresh counters

  private:
    void touch() { faces_dirty_ = true; }
    void check_edge(EdgeId e) const;
    void check_vertex(VertexId v) const;

    std::map<VertexId, std::vector<EdgeId>> rot_;
    std::map<EdgeId, std::pair<VertexId, VertexId>> edges_;
    std::optional<Dart> outer_;
    VertexId next_v_ = 0;
    EdgeId next_e_ = 0;

    mutable bool faces_dirty_ = true;
    mutable std::vector<Face> faces_;
    mutable std::map<Dart, int> face_index_;
};

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    std::map<VertexId, int> per_vertex;
};

DegreeProfile degree_profile(const PlaneGraph& g);

/// True when every vertex has degree k.
bool is_regular(const PlaneGraph& g, int k);

/// True when no two edges share both endpoints and the graph has no loops.
bool is_simple(const PlaneGraph& g);

}  // namespace planarforge
