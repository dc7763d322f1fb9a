#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "planarforge/plane_graph.hpp"
#include "planarforge/spqr.hpp"
#include "planarforge/surgery.hpp"

namespace planarforge {

/// The Lemma-1 induction invariant: an augmented pertinent graph (parent edge
/// included) with free-edge lists L and R on the two parent-incident faces.
/// Normal form: the L edges border the face of dart (parent_edge, u -> v).
struct ExtendibleTriple {
    PlaneGraph pert;        // pert*(mu), parent edge included
    EdgeId parent_edge = -1;
    VertexId pole_u = -1, pole_v = -1;
    std::vector<EdgeId> L;  // two host edges (one for Q nodes), walk-ordered from u
    std::vector<EdgeId> R;  // one host edge
    bool is_q = false;
};

struct TripleReport {
    bool valid = false;
    std::vector<std::string> violations;
};

struct AugmentationResult {
    PlaneGraph graph;                          // 3-connected output
    std::vector<std::pair<EdgeId, EdgeId>> pairs;  // disjoint pairs of input edges
    std::vector<HSplitRecord> records;         // one per pair, in application order
    /// The host with the embedding adjustments the construction chose
    /// (pertinent-graph flips, P-node reorderings): the same abstract graph
    /// as the input, re-embedded so every pair is face-adjacent when the
    /// splits are replayed in order.
    PlaneGraph embedded_host;
};

/// Bottom-up computation of extendible triples over the SPQR tree.
class AugmentEngine {
  public:
    /// Host must be simple, biconnected, planar-embedded, min degree >= 3.
    explicit AugmentEngine(const PlaneGraph& host);

    /// Runs the whole pipeline: root selection, bottom-up triples, final
    /// root split. Throws MinDegreeTooLow / NotBiconnected /
    /// NoRNodeAdjacentRoot.
    AugmentationResult run();

    // per-node-kind steps, exposed for direct testing
    ExtendibleTriple process_q(EdgeId host_edge);
    ExtendibleTriple process_s(const SPQRTree& t, int node);
    ExtendibleTriple process_p(const SPQRTree& t, int node);
    ExtendibleTriple process_r(const SPQRTree& t, int node);
    ExtendibleTriple process_node(const SPQRTree& t, int node);

    const std::vector<std::pair<EdgeId, EdgeId>>& pairs() const { return pairs_; }
    const std::set<EdgeId>& consumed() const { return consumed_; }

  private:
    friend struct AugmentTestHook;
    PlaneGraph host_;

    std::set<EdgeId> consumed_;  // host edges used by some split
    std::vector<std::pair<EdgeId, EdgeId>> pairs_;
    std::vector<HSplitRecord> records_;
    VertexId next_v_ = 0;
    EdgeId next_e_ = 0;
    std::map<EdgeId, EdgeId> half_of_;  // split half -> original host edge

    bool fresh(EdgeId e) const { return !consumed_.count(e); }
    void sync_before(PlaneGraph& g);
    void sync_after(const PlaneGraph& g);
    HSplitRecord split(PlaneGraph& g, EdgeId a, EdgeId b);
    void normalize(ExtendibleTriple& t) const;
};

/// Performs the H-split on <e, parent edge>, suppresses degree-2 vertices
/// other than the poles, and decides whether the result is a subdivision of a
/// 3-connected planar graph (a bond with >= 3 edges after suppressing the
/// poles also qualifies). Throws EdgeNotOnOuterFace when e does not border a
/// parent-incident face.
bool check_externally_3connectible(const ExtendibleTriple& t, EdgeId e);

/// Literal invariant checker: freshness against `used`, face sides, and
/// external 3-connectibility at L[0].
TripleReport validate_triple(const ExtendibleTriple& t, const std::set<EdgeId>& used);

/// Lemma 1: H-splits on disjoint pairs of host edges yielding a 3-connected
/// planar graph with min and max degree preserved.
AugmentationResult augment_to_3connected(const PlaneGraph& g);

/// Runs Lemma 1 for the pair list, then applies `augmentor` to each pair on
/// the evolving host instead of the plain H-split; the result must pass the
/// 3-connectivity census (GadgetContractViolated otherwise).
PlaneGraph augment_with_gadget(
    const PlaneGraph& g,
    const std::function<PlaneGraph(const PlaneGraph&, EdgeId, EdgeId)>& augmentor);

}  // namespace planarforge
