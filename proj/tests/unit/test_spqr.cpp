#include <doctest.h>

#include "planarforge/connectivity.hpp"
#include "planarforge/shapes.hpp"
#include "planarforge/spqr.hpp"

using namespace planarforge;

namespace {

bool cyclically_equal(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (size_t s = 0; s < a.size(); ++s) {
        bool ok = true;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[(s + i) % b.size()]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

void check_reconstruction(const PlaneGraph& host, EdgeId root_edge) {
    SPQRTree t = SPQRTree::build(host, root_edge);
    PlaneGraph r = t.reassemble();
    REQUIRE(r.num_vertices() == host.num_vertices());
    REQUIRE(r.num_edges() == host.num_edges());
    for (EdgeId e : host.edge_ids()) {
        REQUIRE(r.has_edge(e));
        auto [a, b] = host.endpoints(e);
        auto [c, d] = r.endpoints(e);
        CHECK(std::minmax(a, b) == std::minmax(c, d));
    }
    for (VertexId v : host.vertices()) CHECK(cyclically_equal(r.rotation(v), host.rotation(v)));
}

int count_kind(const SPQRTree& t, NodeKind k) {
    int n = 0;
    for (int id : t.node_ids())
        if (t.node(id).kind == k) ++n;
    return n;
}

}  // namespace

TEST_CASE("K4: root Q with a single R child whose skeleton is K4") {
    PlaneGraph g = shapes::k4();
    SPQRTree t = SPQRTree::build(g, 0);
    const SPQRNode& root = t.node(t.root());
    CHECK(root.kind == NodeKind::Q);
    REQUIRE(root.children.size() == 1);
    int top = root.children.begin()->second;
    CHECK(t.node(top).kind == NodeKind::R);
    CHECK(t.node(top).skeleton.num_vertices() == 4);
    CHECK(t.node(top).skeleton.num_edges() == 6);
    CHECK(count_kind(t, NodeKind::R) == 1);
    CHECK(count_kind(t, NodeKind::S) == 0);
    CHECK(count_kind(t, NodeKind::P) == 0);
    check_reconstruction(g, 0);
}

TEST_CASE("C5: a single S node with skeleton C5") {
    PlaneGraph g = shapes::cycle(5);
    SPQRTree t = SPQRTree::build(g, 2);
    int top = t.node(t.root()).children.begin()->second;
    CHECK(t.node(top).kind == NodeKind::S);
    CHECK(t.node(top).skeleton.num_edges() == 5);
    CHECK(count_kind(t, NodeKind::S) == 1);
    check_reconstruction(g, 2);
}

TEST_CASE("theta: P node with three S children") {
    PlaneGraph g = shapes::theta();
    SPQRTree t = SPQRTree::build(g, 0);
    CHECK(count_kind(t, NodeKind::P) == 1);
    CHECK(count_kind(t, NodeKind::S) == 3);
    // the P node: 2 pole vertices, 3 parallel compositions; with the tree
    // rooted inside one path, its skeleton holds the other two plus the
    // parent edge, and it is adjacent to three S nodes in total
    for (int id : t.node_ids())
        if (t.node(id).kind == NodeKind::P) {
            const SPQRNode& p = t.node(id);
            CHECK(p.skeleton.num_vertices() == 2);
            CHECK(p.skeleton.num_edges() == 3);
            int s_neighbors = 0;
            for (const auto& [e, c] : p.children)
                if (t.node(c).kind == NodeKind::S) ++s_neighbors;
            if (p.parent >= 0 && t.node(p.parent).kind == NodeKind::S) ++s_neighbors;
            CHECK(s_neighbors == 3);
        }
    check_reconstruction(g, 0);
}

TEST_CASE("two-block cubic 8: S ring with two R children") {
    PlaneGraph g = shapes::two_block_cubic_8();
    SPQRTree t = SPQRTree::build(g, 0);
    CHECK(count_kind(t, NodeKind::S) == 1);
    CHECK(count_kind(t, NodeKind::R) == 2);
    for (int id : t.node_ids())
        if (t.node(id).kind == NodeKind::R) {
            CHECK(t.node(id).skeleton.num_vertices() == 4);
            CHECK(t.node(id).skeleton.num_edges() == 6);  // K4-minus-edge + virtual + parent side
            CHECK(is_triconnected(t.node(id).skeleton));
        }
    check_reconstruction(g, 0);
}

TEST_CASE("reconstruction identity over the named corpus and every root edge") {
    for (const PlaneGraph& g :
         {shapes::k4(), shapes::cycle(4), shapes::theta(), shapes::cube(), shapes::prism(3),
          shapes::octahedron(), shapes::wheel(5), shapes::two_block_cubic_8()}) {
        for (EdgeId e : g.edge_ids()) check_reconstruction(g, e);
    }
}

TEST_CASE("pertinent and expansion graphs") {
    PlaneGraph g = shapes::two_block_cubic_8();
    SPQRTree t = SPQRTree::build(g, 0);
    // Q leaves: single edges
    for (int id : t.node_ids()) {
        const SPQRNode& n = t.node(id);
        if (n.kind != NodeKind::Q || id == t.root()) continue;
        PlaneGraph p = t.pertinent_graph(id);
        CHECK(p.num_edges() == 1);
        CHECK(p.num_vertices() == 2);
    }
    // root's pert is the host itself
    CHECK(t.pertinent_graph(t.root()) == g);
    // expansion of a virtual edge = child's pert minus parent edge
    for (int id : t.node_ids()) {
        const SPQRNode& n = t.node(id);
        for (const auto& [e, child] : n.children) {
            if (t.node(child).kind == NodeKind::Q) continue;
            PlaneGraph ex = t.expansion_graph(id, e);
            CHECK(ex.num_edges() == static_cast<int>(t.node(child).pert_edges.size()));
            ex.validate();
        }
        if (id != t.root()) CHECK_THROWS_AS(t.expansion_graph(id, n.parent_edge), GraphError);
    }
    // pert graphs validate as embeddings
    for (int id : t.node_ids()) t.pertinent_graph(id).validate();
}

TEST_CASE("skeleton invariants") {
    for (const PlaneGraph& g :
         {shapes::k4(), shapes::cube(), shapes::theta(), shapes::two_block_cubic_8(),
          shapes::wheel(5), shapes::octahedron()}) {
        SPQRTree t = SPQRTree::build(g, 0);
        for (int id : t.node_ids()) {
            const SPQRNode& n = t.node(id);
            n.skeleton.validate();
            if (n.kind == NodeKind::S) {
                CHECK(n.skeleton.num_edges() >= 3);
                for (VertexId v : n.skeleton.vertices()) CHECK(n.skeleton.degree(v) == 2);
            }
            if (n.kind == NodeKind::P) {
                CHECK(n.skeleton.num_vertices() == 2);
                CHECK(n.skeleton.num_edges() >= 3);
            }
            if (n.kind == NodeKind::R) {
                CHECK(is_simple(n.skeleton));
                CHECK(is_triconnected(n.skeleton));
            }
            // internal nodes have at least two children
            if (n.kind != NodeKind::Q) CHECK(n.children.size() >= 2);
        }
    }
}

TEST_CASE("min-degree-3 hosts: no two Q children adjacent in an S skeleton") {
    for (const PlaneGraph& g : {shapes::k4(), shapes::cube(), shapes::two_block_cubic_8(),
                                shapes::octahedron(), shapes::prism(4)}) {
        SPQRTree t = SPQRTree::build(g, 0);
        for (int id : t.node_ids()) {
            const SPQRNode& n = t.node(id);
            if (n.kind != NodeKind::S) continue;
            for (VertexId v : n.skeleton.vertices()) {
                int real = 0;
                for (EdgeId e : n.skeleton.rotation(v))
                    if (n.skeleton_edge_real(e) && e != n.parent_edge) ++real;
                CHECK(real <= 1);
            }
        }
    }
}

TEST_CASE("determinism: identical trees for identical input") {
    PlaneGraph g = shapes::two_block_cubic_8();
    SPQRTree a = SPQRTree::build(g, 0);
    SPQRTree b = SPQRTree::build(g, 0);
    CHECK(a.dump() == b.dump());
    CHECK(a.dump_dot() == b.dump_dot());
}

TEST_CASE("SPQR rejects bad inputs") {
    CHECK_THROWS_AS(SPQRTree::build(shapes::path(3), 0), GraphError);  // not biconnected
    PlaneGraph tiny = shapes::path(1);
    CHECK_THROWS_AS(SPQRTree::build(tiny, 0), GraphError);  // too small
}
