#include <doctest.h>

#include "planarforge/augment.hpp"
#include "planarforge/connectivity.hpp"
#include "planarforge/corpus.hpp"
#include "planarforge/oracles.hpp"
#include "planarforge/shapes.hpp"

using namespace planarforge;

TEST_CASE("generator emits class-valid graphs deterministically") {
    for (CorpusClass cls :
         {CorpusClass::TwoConnCubicPlanar, CorpusClass::TwoConnPlanarDelta3,
          CorpusClass::FourRegularPlanar, CorpusClass::TriangulationDeficient}) {
        auto a = gen_corpus(cls, 7, 6);
        auto b = gen_corpus(cls, 7, 6);
        REQUIRE(a.size() == 6);
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(matches_class(a[i], cls));
            CHECK(a[i] == b[i]);
        }
        auto c = gen_corpus(cls, 8, 3);
        bool differs = false;
        for (const PlaneGraph& g : c)
            if (!(g == a[0])) differs = true;
        CHECK(differs);
    }
}

TEST_CASE("medial graphs are 4-regular planar") {
    for (const PlaneGraph& g : {shapes::k4(), shapes::cube(), shapes::prism(3)}) {
        PlaneGraph m = medial_graph(g);
        m.validate();
        CHECK(is_regular(m, 4));
        CHECK(m.euler_ok());
        CHECK(m.num_vertices() == g.num_edges());
        CHECK(m.num_edges() == 2 * g.num_edges());
    }
    // medial of K4 is the octahedron
    PlaneGraph m = medial_graph(shapes::k4());
    CHECK(m.num_vertices() == 6);
    CHECK(is_triconnected(m));
}

TEST_CASE("the 4-regular cut-vertex host") {
    PlaneGraph g = four_regular_cutvertex_host();
    g.validate();
    CHECK(is_regular(g, 4));
    CHECK(!is_biconnected(g));
    auto c = cut_census(g);
    CHECK(c.num_1cuts() == 1);
    auto b = blocks(g);
    CHECK(b.blocks.size() == 2);
}

TEST_CASE("non-3-colorable 4-regular hosts exist in the toolbox") {
    CHECK(!is_3colorable(shapes::antiprism(4)).colorable);
    CHECK(!is_3colorable(shapes::antiprism(5)).colorable);
    CHECK(is_3colorable(shapes::octahedron()).colorable);
}

TEST_CASE("augmentation engine over a generated cubic corpus") {
    auto hosts = gen_corpus(CorpusClass::TwoConnCubicPlanar, 3, 12, 12);
    for (const PlaneGraph& host : hosts) {
        auto r = augment_to_3connected(host);
        r.graph.validate();
        CHECK(is_triconnected(r.graph));
        CHECK(is_regular(r.graph, 3));
        CHECK(cut_census(r.graph).num_2cuts() == 0);
    }
}

TEST_CASE("augmentation engine over a generated delta-3 corpus") {
    auto hosts = gen_corpus(CorpusClass::TwoConnPlanarDelta3, 5, 12, 12);
    for (const PlaneGraph& host : hosts) {
        auto r = augment_to_3connected(host);
        CHECK(is_triconnected(r.graph));
        auto pa = degree_profile(host);
        auto pb = degree_profile(r.graph);
        CHECK(pb.min_degree == 3);
        CHECK(pb.max_degree == pa.max_degree);
    }
}
