#include <doctest.h>

#include "planarforge/embedder.hpp"
#include "planarforge/oracles.hpp"
#include "planarforge/shapes.hpp"

using namespace planarforge;

TEST_CASE("MIS on named graphs") {
    CHECK(max_independent_set(shapes::k4()).alpha == 1);
    CHECK(max_independent_set(shapes::cycle(5)).alpha == 2);
    CHECK(max_independent_set(shapes::cube()).alpha == 4);
    CHECK(max_independent_set(shapes::octahedron()).alpha == 2);
    CHECK(max_independent_set(shapes::wheel(6)).alpha == 3);
}

TEST_CASE("MIS matches the exhaustive twin and yields lex-min witnesses") {
    for (const PlaneGraph& g : {shapes::k4(), shapes::cycle(7), shapes::cube(),
                                shapes::octahedron(), shapes::prism(5), shapes::wheel(5),
                                shapes::two_block_cubic_8(), shapes::antiprism(4)}) {
        auto a = max_independent_set(g);
        auto b = max_independent_set_exhaustive(g);
        CHECK(a.alpha == b.alpha);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("3-coloring on named graphs") {
    CHECK(!is_3colorable(shapes::k4()).colorable);
    CHECK(is_3colorable(shapes::cycle(5)).colorable);
    CHECK(is_3colorable(shapes::octahedron()).colorable);
    CHECK(is_3colorable(shapes::cube()).colorable);
    // odd antiprisms that are not multiples of three are 4-chromatic
    CHECK(!is_3colorable(shapes::antiprism(4)).colorable);
    CHECK(!is_3colorable(shapes::antiprism(5)).colorable);
}

TEST_CASE("3-coloring matches the exhaustive twin") {
    for (const PlaneGraph& g : {shapes::k4(), shapes::cycle(5), shapes::octahedron(),
                                shapes::wheel(5), shapes::wheel(6), shapes::antiprism(4)}) {
        auto a = is_3colorable(g);
        auto b = is_3colorable_exhaustive(g);
        CHECK(a.colorable == b.colorable);
        if (a.colorable) {
            for (EdgeId e : g.edge_ids()) {
                auto [u, v] = g.endpoints(e);
                CHECK(a.witness.at(u) != a.witness.at(v));
            }
        }
    }
}

TEST_CASE("coloring extension with pins") {
    PlaneGraph c5 = shapes::cycle(5);
    auto ext = extend_3coloring(c5, {{0, 1}, {1, 2}});
    REQUIRE(ext.has_value());
    CHECK(ext->at(0) == 1);
    auto bad = extend_3coloring(shapes::k4(), {{0, 1}, {1, 1}});
    CHECK(!bad.has_value());
}

TEST_CASE("steiner tree basics") {
    PlaneGraph k4 = shapes::k4();
    CHECK(steiner_tree(k4, {0}).weight == 0);
    CHECK(steiner_tree(k4, {0, 1}).weight == 1);
    CHECK(steiner_tree(k4, {0, 1, 2, 3}).weight == 3);

    PlaneGraph p3 = shapes::path(2);
    CHECK(steiner_tree(p3, {0, 2}).weight == 2);

    PlaneGraph c6 = shapes::cycle(6);
    CHECK(steiner_tree(c6, {0, 3}).weight == 3);
}

TEST_CASE("steiner agrees with the exhaustive twin, including weights") {
    PlaneGraph w5 = shapes::wheel(5);
    std::map<EdgeId, Weight> weights;
    for (EdgeId e : w5.edge_ids()) weights[e] = 1 + (e % 3);
    for (const std::set<VertexId>& t :
         {std::set<VertexId>{0, 2}, {1, 3, 5}, {0, 1, 2, 3}, {2, 4}}) {
        auto a = steiner_tree(w5, t, weights);
        auto b = steiner_tree_exhaustive(w5, t, weights);
        CHECK(a.weight == b.weight);
    }
}

TEST_CASE("APSP dijkstra vs floyd") {
    for (const PlaneGraph& g : {shapes::path(2), shapes::cycle(6), shapes::wheel(5)}) {
        auto a = all_pairs_shortest_paths(g);
        auto b = all_pairs_shortest_paths_floyd(g);
        CHECK(a == b);
    }
    PlaneGraph c6 = shapes::cycle(6);
    auto d = all_pairs_shortest_paths(c6);
    CHECK(d.at(0).at(3) == 3);
    PlaneGraph p3 = shapes::path(2);
    CHECK(all_pairs_shortest_paths(p3).at(0).at(2) == 2);
}

TEST_CASE("budget limits are enforced") {
    OracleBudget tiny;
    tiny.mis_vertex_cap = 3;
    tiny.coloring_vertex_cap = 3;
    tiny.steiner_vertex_cap = 3;
    tiny.steiner_small_vertex_cap = 3;
    CHECK_THROWS_AS(max_independent_set(shapes::k4(), tiny), GraphError);
    CHECK_THROWS_AS(is_3colorable(shapes::k4(), tiny), GraphError);
    CHECK_THROWS_AS(steiner_tree(shapes::k4(), {0, 1}, {}, tiny), GraphError);
}

TEST_CASE("embedder reproduces valid embeddings of abstract graphs") {
    for (const PlaneGraph& g : {shapes::k4(), shapes::cube(), shapes::octahedron(),
                                shapes::theta(), shapes::prism(4)}) {
        std::map<EdgeId, std::pair<VertexId, VertexId>> es;
        for (EdgeId e : g.edge_ids()) es[e] = g.endpoints(e);
        PlaneGraph embedded = embed_biconnected(g.vertices(), es);
        embedded.validate();
        CHECK(embedded.num_edges() == g.num_edges());
        CHECK(embedded.euler_ok());
    }
}

TEST_CASE("embedder rejects non-planar input") {
    // K5
    std::vector<VertexId> vs = {0, 1, 2, 3, 4};
    std::map<EdgeId, std::pair<VertexId, VertexId>> es;
    EdgeId id = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) es[id++] = {i, j};
    CHECK_THROWS_AS(embed_biconnected(vs, es), GraphError);
}
