#include <doctest.h>

#include "planarforge/canonical.hpp"
#include "planarforge/connectivity.hpp"
#include "planarforge/shapes.hpp"

using namespace planarforge;

namespace {

// anchor triples (v1, v2, vn): v2, v1, vn clockwise on the outer walk with
// (v1, v2) an edge of the walk and vn distinct
std::vector<std::tuple<VertexId, VertexId, VertexId>> admissible_anchors(const PlaneGraph& g,
                                                                         Dart outer) {
    std::vector<std::tuple<VertexId, VertexId, VertexId>> out;
    const Face& f = g.faces()[g.face_of(outer)];
    std::vector<VertexId> w;
    for (const Dart& d : f.walk) w.push_back(d.tail);
    size_t n = w.size();
    for (size_t i = 0; i < n; ++i) {
        VertexId v2 = w[i], v1 = w[(i + 1) % n];
        for (size_t off = 2; off < n; ++off) {
            VertexId vn = w[(i + off) % n];
            if (vn == v1 || vn == v2) continue;
            out.push_back({v1, v2, vn});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("K4 canonical ordering has the forced shape") {
    PlaneGraph g = shapes::k4();
    // outer face of the drawing: triangle (0,1,2); inner vertex 3
    Dart outer{0, 0};
    // anchors: v2=1, v1=0 consecutive clockwise... pick from the walk
    auto anchors = admissible_anchors(g, outer);
    REQUIRE(!anchors.empty());
    for (auto [v1, v2, vn] : anchors) {
        CanonicalOrdering pi = canonical_ordering(g, outer, v1, v2, vn);
        REQUIRE(pi.parts.size() == 3);
        CHECK(pi.parts[0] == std::vector<VertexId>{v1, v2});
        CHECK(pi.parts[1].size() == 1);
        CHECK(pi.parts[2] == std::vector<VertexId>{vn});
        auto rep = validate_canonical_ordering(g, outer, pi);
        CHECK(rep.valid);
    }
}

TEST_CASE("wheel W5 orderings validate") {
    PlaneGraph g = shapes::wheel(5);
    Dart outer{0, 1};  // rim edge; rim is the outer face
    for (auto [v1, v2, vn] : admissible_anchors(g, outer)) {
        CanonicalOrdering pi = canonical_ordering(g, outer, v1, v2, vn);
        auto rep = validate_canonical_ordering(g, outer, pi);
        if (!rep.valid)
            for (const auto& v : rep.violations) MESSAGE(v);
        CHECK(rep.valid);
    }
}

TEST_CASE("octahedron and cube orderings validate for every admissible anchor triple") {
    for (PlaneGraph g : {shapes::octahedron(), shapes::cube(), shapes::prism(3)}) {
        Dart outer{0, g.endpoints(0).first};
        for (auto [v1, v2, vn] : admissible_anchors(g, outer)) {
            CanonicalOrdering pi = canonical_ordering(g, outer, v1, v2, vn);
            auto rep = validate_canonical_ordering(g, outer, pi);
            if (!rep.valid)
                for (const auto& v : rep.violations) MESSAGE(v);
            CHECK(rep.valid);
        }
    }
}

TEST_CASE("validator rejects broken orderings") {
    PlaneGraph g = shapes::k4();
    Dart outer{0, 0};
    auto anchors = admissible_anchors(g, outer);
    auto [v1, v2, vn] = anchors.front();
    CanonicalOrdering pi = canonical_ordering(g, outer, v1, v2, vn);

    // swap P_2 and P_3: P_k is no longer (vn)
    CanonicalOrdering bad = pi;
    std::swap(bad.parts[1], bad.parts[2]);
    CHECK(!validate_canonical_ordering(g, outer, bad).valid);

    // random singleton shuffle on W5 fails with a cited violation
    PlaneGraph w = shapes::wheel(5);
    Dart wouter{0, 1};
    CanonicalOrdering junk;
    junk.v1 = 1;
    junk.v2 = 2;
    junk.vn = 5;
    junk.parts = {{1, 2}, {0}, {4}, {3}, {5}};
    auto rep = validate_canonical_ordering(w, wouter, junk);
    CHECK(!rep.valid);
    CHECK(!rep.violations.empty());
}

TEST_CASE("anchor preconditions") {
    PlaneGraph g = shapes::k4();
    Dart outer{0, 0};
    CHECK_THROWS_AS(canonical_ordering(g, outer, 0, 3, 2), GraphError);  // v2 not on outer
    CHECK_THROWS_AS(canonical_ordering(shapes::cycle(4), Dart{0, 0}, 0, 1, 2), GraphError);
    // wrong orientation: swap v1/v2 so the clockwise condition fails
    auto anchors = admissible_anchors(g, outer);
    auto [v1, v2, vn] = anchors.front();
    CHECK_THROWS_AS(canonical_ordering(g, outer, v2, v1, vn), GraphError);
}
