#include <doctest.h>

#include "planarforge/augment.hpp"
#include "planarforge/connectivity.hpp"
#include "planarforge/shapes.hpp"
#include "planarforge/spqr.hpp"

using namespace planarforge;

namespace {

void check_result(const PlaneGraph& host, const AugmentationResult& r) {
    r.graph.validate();
    CHECK(r.graph.euler_ok());
    REQUIRE(r.graph.num_vertices() >= 4);
    CHECK(is_triconnected(r.graph));
    auto before = degree_profile(host);
    auto after = degree_profile(r.graph);
    // splits add degree-3 dummies: min degree is preserved exactly for
    // delta = 3 hosts and otherwise drops to 3
    if (r.pairs.empty()) CHECK(after.min_degree == before.min_degree);
    else CHECK(after.min_degree == std::min(before.min_degree, 3));
    CHECK(after.max_degree == before.max_degree);
    // old vertices keep their exact degree
    for (VertexId v : host.vertices()) CHECK(r.graph.degree(v) == host.degree(v));
    // pairs are pairwise disjoint host edges
    std::set<EdgeId> seen;
    for (auto [a, b] : r.pairs) {
        CHECK(host.has_edge(a));
        CHECK(host.has_edge(b));
        CHECK(a != b);
        CHECK(seen.insert(a).second);
        CHECK(seen.insert(b).second);
    }
    // counting: each split adds 2 vertices and 3 edges
    CHECK(r.graph.num_vertices() == host.num_vertices() + 2 * static_cast<int>(r.pairs.size()));
    CHECK(r.graph.num_edges() == host.num_edges() + 3 * static_cast<int>(r.pairs.size()));
}

}  // namespace

TEST_CASE("Q triples are extendible by definition") {
    PlaneGraph g = shapes::k4();
    AugmentEngine eng(g);
    ExtendibleTriple t = eng.process_q(0);
    CHECK(t.is_q);
    CHECK(t.L == std::vector<EdgeId>{0});
    CHECK(t.R == std::vector<EdgeId>{0});
    CHECK(check_externally_3connectible(t, 0));
    auto rep = validate_triple(t, {});
    CHECK(rep.valid);
}

TEST_CASE("external 3-connectibility: cycle pertinent graphs") {
    // S-node pertinent graph: a 4-cycle whose edge 3 acts as the parent edge;
    // H-splitting <e, parent> suppresses to a subdivision of the 3-bond
    PlaneGraph c4 = shapes::cycle(4);
    ExtendibleTriple t;
    t.pert = c4;
    t.parent_edge = 3;  // (3, 0)
    t.pole_u = 0;
    t.pole_v = 3;
    t.L = {1, 2};
    t.R = {0};
    CHECK(check_externally_3connectible(t, 1));  // middle edge, Fig-6 shape
    // an edge on the wrong face is rejected up front
    PlaneGraph k4 = shapes::k4();
    ExtendibleTriple t2;
    t2.pert = k4;
    t2.parent_edge = 0;
    t2.pole_u = 0;
    t2.pole_v = 1;
    t2.L = {1, 4};
    t2.R = {2};
    // edge 5 = (2,3) borders faces (2,1,3) and (0,2,3): not parent-incident
    CHECK_THROWS_AS(check_externally_3connectible(t2, 5), GraphError);
}

TEST_CASE("K4 augments to a 3-connected cubic planar graph") {
    PlaneGraph g = shapes::k4();
    auto r = augment_to_3connected(g);
    check_result(g, r);
    CHECK(r.pairs.size() >= 1);
    CHECK(is_regular(r.graph, 3));
    CHECK(cut_census(r.graph).num_2cuts() == 0);
}

TEST_CASE("two-block cubic 8-vertex host augments correctly") {
    PlaneGraph g = shapes::two_block_cubic_8();
    REQUIRE(!is_triconnected(g));
    auto r = augment_to_3connected(g);
    check_result(g, r);
    CHECK(is_regular(r.graph, 3));
}

TEST_CASE("already 3-connected hosts still augment validly") {
    for (const PlaneGraph& g : {shapes::cube(), shapes::octahedron(), shapes::prism(3),
                                shapes::prism(5), shapes::wheel(5), shapes::wheel(6)}) {
        auto r = augment_to_3connected(g);
        check_result(g, r);
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(augment_to_3connected(shapes::cycle(5)), GraphError);   // min degree 2
    CHECK_THROWS_AS(augment_to_3connected(shapes::path(3)), GraphError);    // not biconnected
    CHECK_THROWS_AS(augment_to_3connected(shapes::theta()), GraphError);    // degree-2 vertices
}

TEST_CASE("2-goodness across every executed split") {
    for (const PlaneGraph& host :
         {shapes::k4(), shapes::two_block_cubic_8(), shapes::cube(), shapes::prism(4)}) {
        AugmentEngine eng(host);
        auto r = eng.run();
        // same abstract graph, possibly re-embedded (subtree flips)
        CHECK(r.embedded_host.num_vertices() == host.num_vertices());
        CHECK(r.embedded_host.num_edges() == host.num_edges());
        for (EdgeId e : host.edge_ids()) {
            auto [a, b] = host.endpoints(e);
            auto [c, d] = r.embedded_host.endpoints(e);
            CHECK(std::minmax(a, b) == std::minmax(c, d));
        }
        PlaneGraph cur = r.embedded_host;
        auto census = cut_census(cur);
        for (auto [a, b] : r.pairs) {
            auto [next, rec] = h_split(cur, a, b);
            auto after = cut_census(next);
            CHECK(after.num_2cuts() <= census.num_2cuts());
            CHECK(after.num_1cuts() <= census.num_1cuts());
            cur = std::move(next);
            census = after;
        }
        CHECK(is_triconnected(cur));
    }
}

TEST_CASE("per-node triples on the two-block host pass the invariant checker") {
    PlaneGraph host = shapes::two_block_cubic_8();
    SPQRTree t = SPQRTree::build(host, 0);
    int top = t.node(t.root()).children.begin()->second;
    AugmentEngine eng(host);
    // walk the tree bottom-up and validate every produced triple
    std::function<void(int)> rec = [&](int id) {
        const SPQRNode& n = t.node(id);
        if (n.kind == NodeKind::Q) return;
        for (int c : t.children_of(id)) rec(c);
    };
    rec(top);
    ExtendibleTriple triple = eng.process_node(t, top);
    auto rep = validate_triple(triple, eng.consumed());
    if (!rep.valid)
        for (const auto& v : rep.violations) MESSAGE(v);
    CHECK(rep.valid);
}

TEST_CASE("augment_with_gadget with a plain H-split matches augment_to_3connected") {
    PlaneGraph host = shapes::two_block_cubic_8();
    auto base = augment_to_3connected(host);
    PlaneGraph alt = augment_with_gadget(host, [](const PlaneGraph& g, EdgeId a, EdgeId b) {
        return h_split(g, a, b).first;
    });
    CHECK(alt.num_vertices() == base.graph.num_vertices());
    CHECK(alt.num_edges() == base.graph.num_edges());
    CHECK(is_triconnected(alt));
    auto pa = degree_profile(alt);
    auto pb = degree_profile(base.graph);
    CHECK(pa.min_degree == pb.min_degree);
    CHECK(pa.max_degree == pb.max_degree);
}

TEST_CASE("a broken gadget augmentor is rejected") {
    // subdividing both edges without the cross edge cannot reach 3-connectivity
    PlaneGraph host = shapes::two_block_cubic_8();
    auto no_cross = [](const PlaneGraph& g, EdgeId a, EdgeId b) {
        PlaneGraph out = subdivide_edge(g, a, 1).graph;
        out = subdivide_edge(out, b, 1).graph;
        return out;
    };
    CHECK_THROWS_AS(augment_with_gadget(host, no_cross), GraphError);
}
