#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "planarforge/plane_graph.hpp"

namespace planarforge {

enum class NodeKind { S, P, Q, R };

const char* node_kind_name(NodeKind k);

/// One node of the rooted SPQR tree. Skeleton edges reuse host edge ids for
/// real edges; virtual edges carry fresh ids (disjoint from the host's).
struct SPQRNode {
    int id = -1;
    NodeKind kind = NodeKind::Q;
    PlaneGraph skeleton;      // embedded, inherited from the host embedding
    VertexId pole_u = -1, pole_v = -1;
    EdgeId parent_edge = -1;  // edge of `skeleton` standing for the rest
    /// skeleton edge -> child node id (only virtual non-parent edges and, for
    /// S/P/R nodes, real edges mapping to Q leaves)
    std::map<EdgeId, int> children;
    bool skeleton_edge_real(EdgeId e) const { return real_edges.count(e) != 0; }
    std::set<EdgeId> real_edges;  // skeleton edges that are host edges
    int parent = -1;              // node id, -1 for the root
    EdgeId host_edge = -1;        // Q nodes: the represented host edge
    std::set<EdgeId> pert_edges;  // host edges of pert(node), excl. parent edge
};

class SPQRTree {
  public:
    /// Builds the rooted SPQR tree of a biconnected host with respect to
    /// root_edge (that edge's Q node becomes the root). Skeleton embeddings
    /// are inherited from the host's embedding.
    /// Throws NotBiconnected / TooSmall (|E| < 3).
    static SPQRTree build(const PlaneGraph& host, EdgeId root_edge);

    const PlaneGraph& host() const { return host_; }
    int root() const { return root_; }
    const SPQRNode& node(int id) const { return nodes_.at(id); }
    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    std::vector<int> node_ids() const;
    /// Children of a node in deterministic order (by lowest host edge id in
    /// the child's pertinent graph).
    std::vector<int> children_of(int id) const;

    /// pert(node): host-induced embedded subgraph of the node's pertinent
    /// edges plus the parent edge (u, v) inserted at the outside slot.
    /// For Q leaves this is the single host edge.
    PlaneGraph pertinent_graph(int id) const;

    /// Expansion graph of a non-parent virtual edge of `node`'s skeleton:
    /// pert(child) minus the parent edge. Throws IsParentEdge.
    PlaneGraph expansion_graph(int node_id, EdgeId virtual_edge) const;

    /// Skeleton re-embedded: optionally flipped, and for P nodes with the
    /// non-parent edges permuted into `p_order` (must list them all).
    PlaneGraph embed_skeleton(int id, bool flip, const std::vector<EdgeId>& p_order = {}) const;

    /// Reassembles the host from skeletons bottom-up by splicing expansion
    /// graphs into virtual edges; used by the reconstruction oracle.
    PlaneGraph reassemble() const;

    std::string dump() const;  // indented text
    std::string dump_dot() const;

  private:
    PlaneGraph host_;
    int root_ = -1;
    std::map<int, SPQRNode> nodes_;
    friend class SpqrBuilder;
};

}  // namespace planarforge
