#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planarforge/pg_io.hpp"
#include "planarforge/plane_graph.hpp"
#include "planarforge/shapes.hpp"
#include "planarforge/surgery.hpp"

using namespace planarforge;

TEST_CASE("K4 has four triangular faces") {
    PlaneGraph g = shapes::k4();
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 6);
    const auto& fs = g.faces();
    REQUIRE(fs.size() == 4);
    for (const Face& f : fs) CHECK(f.size() == 3);
}

TEST_CASE("C4 has two faces of size four") {
    PlaneGraph g = shapes::cycle(4);
    const auto& fs = g.faces();
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].size() == 4);
    CHECK(fs[1].size() == 4);
}

TEST_CASE("theta graph has three faces") {
    PlaneGraph g = shapes::theta();
    CHECK(g.faces().size() == 3);
}

TEST_CASE("single edge has one face of size two") {
    PlaneGraph g = shapes::path(1);
    REQUIRE(g.faces().size() == 1);
    CHECK(g.faces()[0].size() == 2);
}

TEST_CASE("octahedron has eight triangular faces") {
    PlaneGraph g = shapes::octahedron();
    const auto& fs = g.faces();
    REQUIRE(fs.size() == 8);
    for (const Face& f : fs) CHECK(f.size() == 3);
}

TEST_CASE("cube and prisms are valid embeddings") {
    CHECK(shapes::cube().faces().size() == 6);
    CHECK(shapes::prism(3).faces().size() == 5);
    CHECK(shapes::prism(5).faces().size() == 7);
    CHECK(shapes::antiprism(4).faces().size() == 10);
    CHECK(shapes::antiprism(5).faces().size() == 12);
    CHECK(shapes::wheel(5).faces().size() == 6);
    CHECK(shapes::two_block_cubic_8().faces().size() == 6);
}

TEST_CASE("a scrambled K4 rotation fails the Euler check") {
    std::map<EdgeId, std::pair<VertexId, VertexId>> e = {
        {0, {0, 1}}, {1, {1, 2}}, {2, {2, 0}}, {3, {0, 3}}, {4, {1, 3}}, {5, {2, 3}}};
    // rotation at vertex 3 permuted to a non-planar scheme
    std::map<VertexId, std::vector<EdgeId>> r = {
        {0, {0, 3, 2}}, {1, {1, 4, 0}}, {2, {2, 5, 1}}, {3, {4, 3, 5}}};
    CHECK_THROWS_AS(PlaneGraph::build({0, 1, 2, 3}, e, r), GraphError);
}

TEST_CASE("rotation inconsistency is rejected") {
    std::map<EdgeId, std::pair<VertexId, VertexId>> e = {{0, {0, 1}}};
    std::map<VertexId, std::vector<EdgeId>> r = {{0, {0}}, {1, {}}};
    CHECK_THROWS_AS(PlaneGraph::build({0, 1}, e, r), GraphError);
}

TEST_CASE("degree profiles") {
    auto p = degree_profile(shapes::k4());
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 3);
    p = degree_profile(shapes::cycle(5));
    CHECK(p.min_degree == 2);
    CHECK(p.max_degree == 2);
    p = degree_profile(shapes::wheel(5));
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 5);
}

TEST_CASE("sum of rotation lengths is 2E and face walks cover all darts") {
    for (const PlaneGraph& g :
         {shapes::k4(), shapes::cycle(6), shapes::theta(), shapes::octahedron(), shapes::cube(),
          shapes::wheel(6), shapes::two_block_cubic_8()}) {
        int total = 0;
        for (VertexId v : g.vertices()) total += g.degree(v);
        CHECK(total == 2 * g.num_edges());
        int dart_count = 0;
        for (const Face& f : g.faces()) dart_count += f.size();
        CHECK(dart_count == 2 * g.num_edges());
    }
}

TEST_CASE("h_split on C4 gives a six-vertex theta-like graph") {
    PlaneGraph g = shapes::cycle(4);
    auto [out, rec] = h_split(g, 0, 2);  // edges (0,1) and (2,3)
    CHECK(out.num_vertices() == 6);
    CHECK(out.num_edges() == 7);
    out.validate();
    CHECK(out.degree(rec.new_v1) == 3);
    CHECK(out.degree(rec.new_v2) == 3);
    for (VertexId v : {0, 1, 2, 3}) CHECK(out.degree(v) == 2);
}

TEST_CASE("h_split on a K4 triangle keeps planarity") {
    PlaneGraph g = shapes::k4();
    // edges 0=(0,1) and 4=(1,3) share the face (1,0,3)
    auto [out, rec] = h_split(g, 0, 4);
    CHECK(out.num_vertices() == 6);
    CHECK(out.num_edges() == 9);
    out.validate();
    CHECK(out.euler_ok());
    for (VertexId v : {0, 1, 2, 3}) CHECK(out.degree(v) == 3);
}

TEST_CASE("h_split without a shared face is rejected") {
    PlaneGraph g = shapes::octahedron();
    // two "opposite" edges of the octahedron share no face: outer edge 0=(0,1)
    // and inner edge 3+... edge 4 = (4,5) lie on disjoint faces
    bool shares = false;
    for (const Face& f : g.faces())
        if (f.contains_edge(0) && f.contains_edge(4)) shares = true;
    REQUIRE(!shares);
    CHECK_THROWS_AS(h_split(g, 0, 4), GraphError);
    CHECK_THROWS_AS(h_split(g, 0, 0), GraphError);
}

TEST_CASE("h_split never changes pre-existing degrees, on several graphs") {
    for (const PlaneGraph& g : {shapes::k4(), shapes::cube(), shapes::prism(3), shapes::theta()}) {
        for (EdgeId e1 : g.edge_ids())
            for (EdgeId e2 : g.edge_ids()) {
                if (e1 >= e2) continue;
                bool shared = false;
                for (const Face& f : g.faces())
                    if (f.contains_edge(e1) && f.contains_edge(e2)) shared = true;
                if (!shared) continue;
                auto [out, rec] = h_split(g, e1, e2);
                for (VertexId v : g.vertices()) CHECK(out.degree(v) == g.degree(v));
                CHECK(out.euler_ok());
            }
    }
}

TEST_CASE("subdivide_edge") {
    PlaneGraph g = shapes::cycle(3);
    auto r = subdivide_edge(g, 0, 1);
    CHECK(r.graph.num_vertices() == 4);
    CHECK(r.graph.num_edges() == 4);
    r.graph.validate();
    auto r8 = subdivide_edge(g, 0, 8);
    CHECK(r8.graph.num_vertices() == 11);
    CHECK(r8.graph.num_edges() == 11);
    r8.graph.validate();
    for (VertexId m : r8.new_vertices) CHECK(r8.graph.degree(m) == 2);
    auto r0 = subdivide_edge(g, 0, 0);
    CHECK(r0.graph == g);
}

TEST_CASE("suppress_degree2 undoes subdivision") {
    PlaneGraph g = shapes::k4();
    auto r = subdivide_edge(g, 0, 3);
    auto back = suppress_degree2(r.graph, {});
    REQUIRE(back.has_value());
    CHECK(back->num_vertices() == 4);
    CHECK(back->num_edges() == 6);
    back->validate();
}

TEST_CASE("pg round trip is canonical") {
    for (const PlaneGraph& g :
         {shapes::k4(), shapes::cycle(5), shapes::theta(), shapes::octahedron(),
          shapes::two_block_cubic_8()}) {
        PgInstance inst;
        inst.graph = g;
        inst.graph.set_outer(Dart{0, g.endpoints(0).first});
        inst.terminals = {0, 1};
        std::string text = serialize_pg(inst);
        PgInstance parsed = parse_pg(text);
        CHECK(parsed == inst);
        CHECK(serialize_pg(parsed) == text);
    }
}

TEST_CASE("pg parse errors") {
    CHECK_THROWS_AS(parse_pg("e 0 0 1\n"), GraphError);               // missing n
    CHECK_THROWS_AS(parse_pg("n 2\ne 0 0 1\nr 0: 0\nr 1: 0\nq\n"), GraphError);
    CHECK_THROWS_AS(parse_pg("n 2\ne 0 0 1\nr 0: 0\n"), GraphError);  // missing incidence
}

TEST_CASE("normalize_ids compacts and preserves structure") {
    PlaneGraph g = shapes::k4();
    auto r = subdivide_edge(g, 0, 2);  // creates fresh ids, removes edge 0
    auto n = normalize_ids(r.graph);
    n.graph.validate();
    CHECK(n.graph.num_vertices() == r.graph.num_vertices());
    CHECK(n.graph.num_edges() == r.graph.num_edges());
    auto ids = n.graph.edge_ids();
    CHECK(ids.front() == 0);
    CHECK(ids.back() == n.graph.num_edges() - 1);
}
