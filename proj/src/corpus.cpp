#include "planarforge/corpus.hpp"

#include <algorithm>
#include <random>

#include "planarforge/connectivity.hpp"
#include "planarforge/shapes.hpp"
#include "planarforge/surgery.hpp"

namespace planarforge {

CorpusClass corpus_class_from_name(const std::string& name) {
    if (name == "2conn-cubic-planar") return CorpusClass::TwoConnCubicPlanar;
    if (name == "2conn-planar-d3") return CorpusClass::TwoConnPlanarDelta3;
    if (name == "4regular-planar") return CorpusClass::FourRegularPlanar;
    if (name == "triangulation-deficient") return CorpusClass::TriangulationDeficient;
    throw GraphError(Err::ParseError, "unknown corpus class '" + name + "'");
}

const char* corpus_class_name(CorpusClass c) {
    switch (c) {
        case CorpusClass::TwoConnCubicPlanar: return "2conn-cubic-planar";
        case CorpusClass::TwoConnPlanarDelta3: return "2conn-planar-d3";
        case CorpusClass::FourRegularPlanar: return "4regular-planar";
        case CorpusClass::TriangulationDeficient: return "triangulation-deficient";
    }
    return "?";
}

bool matches_class(const PlaneGraph& g, CorpusClass cls) {
    if (g.num_vertices() == 0 || !g.is_connected() || !g.euler_ok() || !is_simple(g)) return false;
    DegreeProfile p = degree_profile(g);
    switch (cls) {
        case CorpusClass::TwoConnCubicPlanar:
            return is_biconnected(g) && p.min_degree == 3 && p.max_degree == 3;
        case CorpusClass::TwoConnPlanarDelta3:
            return is_biconnected(g) && p.min_degree == 3;
        case CorpusClass::FourRegularPlanar:
            return p.min_degree == 4 && p.max_degree == 4;
        case CorpusClass::TriangulationDeficient: {
            if (!is_biconnected(g)) return false;
            for (const Face& f : g.faces())
                if (f.size() >= 4) return true;
            return false;
        }
    }
    return false;
}

namespace {

using Rng = std::mt19937_64;

size_t pick(Rng& rng, size_t n) { return static_cast<size_t>(rng() % n); }

// random face-adjacent edge pair
std::optional<std::pair<EdgeId, EdgeId>> random_pair(Rng& rng, const PlaneGraph& g) {
    const auto& fs = g.faces();
    for (int tries = 0; tries < 24; ++tries) {
        const Face& f = fs[pick(rng, fs.size())];
        if (f.size() < 2) continue;
        EdgeId a = f.walk[pick(rng, f.walk.size())].edge;
        EdgeId b = f.walk[pick(rng, f.walk.size())].edge;
        if (a != b) return std::make_pair(a, b);
    }
    return std::nullopt;
}

PlaneGraph op_hsplit(Rng& rng, const PlaneGraph& g) {
    auto pr = random_pair(rng, g);
    if (!pr) return g;
    return h_split(g, pr->first, pr->second).first;
}

// replace a degree-3 vertex by a triangle (keeps cubic graphs cubic)
PlaneGraph op_triangle_expand(Rng& rng, const PlaneGraph& g) {
    std::vector<VertexId> cands;
    for (VertexId v : g.vertices())
        if (g.degree(v) == 3) cands.push_back(v);
    if (cands.empty()) return g;
    VertexId w = cands[pick(rng, cands.size())];
    std::vector<EdgeId> es = g.rotation(w);
    std::vector<VertexId> ns;
    for (EdgeId e : es) ns.push_back(g.other_end(e, w));

    PlaneGraph out = g;
    std::array<VertexId, 3> t{};
    for (int i = 0; i < 3; ++i) t[i] = out.add_vertex();
    // spokes keep the neighbours' rotation slots
    std::array<EdgeId, 3> spoke{};
    for (int i = 0; i < 3; ++i) {
        EdgeId ne = out.fresh_edge_id();
        out.add_edge_with_id(ne, ns[i], t[i]);
        spoke[i] = ne;
        auto order = out.rotation(ns[i]);
        order.pop_back();  // strip the appended copy
        out.set_rotation(ns[i], order);
        out.replace_in_rotation(ns[i], es[i], ne);
    }
    for (EdgeId e : es) out.remove_edge(e);
    out.remove_vertex(w);
    std::array<EdgeId, 3> tri{};
    tri[0] = out.add_edge(t[0], t[1]);
    tri[1] = out.add_edge(t[1], t[2]);
    tri[2] = out.add_edge(t[2], t[0]);
    for (int mirror = 0; mirror < 2; ++mirror) {
        for (int i = 0; i < 3; ++i) {
            EdgeId to_next = tri[i], to_prev = tri[(i + 2) % 3];
            if (mirror == 0) out.set_rotation(t[i], {spoke[i], to_next, to_prev});
            else out.set_rotation(t[i], {spoke[i], to_prev, to_next});
        }
        try {
            out.validate();
            return out;
        } catch (const GraphError&) {
        }
    }
    return g;
}

// join with a small cubic block through a 2-cut of new edges
PlaneGraph op_two_cut_join(Rng& rng, const PlaneGraph& g) {
    PlaneGraph h = pick(rng, 2) == 0 ? shapes::k4() : shapes::prism(3);
    EdgeId eg = g.edge_ids()[pick(rng, g.edge_ids().size())];
    EdgeId eh = h.edge_ids()[pick(rng, h.edge_ids().size())];
    auto [a, b] = g.endpoints(eg);
    auto [c0, d0] = h.endpoints(eh);

    for (int mirror = 0; mirror < 2; ++mirror) {
        PlaneGraph hh = h;
        if (mirror) hh.flip();
        PlaneGraph out = g;
        CopyMaps maps = copy_into(out, hh);
        VertexId c = maps.vertex_map.at(c0), d = maps.vertex_map.at(d0);
        EdgeId ehh = maps.edge_map.at(eh);
        EdgeId j1 = out.fresh_edge_id();
        out.add_edge_with_id(j1, a, c);
        EdgeId j2 = out.fresh_edge_id();
        out.add_edge_with_id(j2, b, d);
        auto strip = [&](VertexId w, EdgeId e) {
            auto order = out.rotation(w);
            auto it = std::find(order.rbegin(), order.rend(), e);
            order.erase(std::next(it).base());
            out.set_rotation(w, order);
        };
        strip(a, j1);
        strip(c, j1);
        strip(b, j2);
        strip(d, j2);
        out.replace_in_rotation(a, eg, j1);
        out.replace_in_rotation(b, eg, j2);
        out.replace_in_rotation(c, ehh, j1);
        out.replace_in_rotation(d, ehh, j2);
        out.remove_edge(eg);
        out.remove_edge(ehh);
        try {
            out.validate();
            if (out.is_connected()) return out;
        } catch (const GraphError&) {
        }
    }
    return g;
}

// insert a chord inside a big face (raises two degrees by one)
PlaneGraph op_face_chord(Rng& rng, const PlaneGraph& g) {
    const auto& fs = g.faces();
    for (int tries = 0; tries < 24; ++tries) {
        const Face& f = fs[pick(rng, fs.size())];
        if (f.size() < 4) continue;
        size_t i = pick(rng, f.walk.size());
        size_t j = pick(rng, f.walk.size());
        VertexId u = f.walk[i].tail, v = f.walk[j].tail;
        if (u == v || g.find_edge(u, v)) continue;
        PlaneGraph out = g;
        insert_edge_in_face(out, f.walk[i], f.walk[j]);
        return out;
    }
    return g;
}

PlaneGraph subdivided_octahedron_block(EdgeId which) {
    PlaneGraph g = shapes::octahedron();
    return subdivide_edge(g, which, 1).graph;
}

}  // namespace

PlaneGraph medial_graph(const PlaneGraph& g) {
    // medial vertex ids reuse the host edge ids
    PlaneGraph m;
    for (EdgeId e : g.edge_ids()) m.add_vertex_with_id(e);

    // corner (face fi, walk position j) joins the medial vertices of the two
    // darts around it; edge ids follow a deterministic corner numbering
    const auto& fs = g.faces();
    std::map<std::pair<int, int>, EdgeId> corner_edge;
    EdgeId next = 0;
    for (size_t fi = 0; fi < fs.size(); ++fi)
        for (int j = 0; j < fs[fi].size(); ++j) {
            const Dart& d1 = fs[fi].walk[j];
            const Dart& d2 = fs[fi].walk[(j + 1) % fs[fi].size()];
            corner_edge[{static_cast<int>(fi), j}] = next;
            m.add_edge_with_id(next, d1.edge, d2.edge);
            ++next;
        }
    // rotation around a medial vertex: the four corners flanking its edge,
    // alternating by side
    auto corner_before = [&](Dart d) {
        int fi = g.face_of(d);
        const Face& f = fs[fi];
        for (int j = 0; j < f.size(); ++j)
            if (f.walk[(j + 1) % f.size()] == d)
                return corner_edge.at({fi, j});
        throw GraphError(Err::Internal, "corner_before");
    };
    auto corner_after = [&](Dart d) {
        int fi = g.face_of(d);
        const Face& f = fs[fi];
        for (int j = 0; j < f.size(); ++j)
            if (f.walk[j] == d) return corner_edge.at({fi, j});
        throw GraphError(Err::Internal, "corner_after");
    };
    for (int mirror = 0; mirror < 2; ++mirror) {
        for (EdgeId e : g.edge_ids()) {
            auto [u, v] = g.endpoints(e);
            Dart duv = g.dart(e, u), dvu = g.dart(e, v);
            std::vector<EdgeId> rot = {corner_before(duv), corner_after(duv),
                                       corner_before(dvu), corner_after(dvu)};
            if (mirror) std::reverse(rot.begin(), rot.end());
            m.set_rotation(e, rot);
        }
        try {
            m.validate();
            return m;
        } catch (const GraphError&) {
        }
    }
    throw GraphError(Err::Internal, "medial embedding failed");
}

PlaneGraph four_regular_cutvertex_host() {
    PlaneGraph b1 = subdivided_octahedron_block(0);
    VertexId v1 = 6;  // the subdivision vertex
    PlaneGraph out = b1;
    PlaneGraph b2 = subdivided_octahedron_block(0);
    CopyMaps maps = copy_into(out, b2);
    VertexId v2 = maps.vertex_map.at(6);
    // merge v2 into v1: v1's rotation gains v2's two edges as one block arc
    std::vector<EdgeId> rot = out.rotation(v1);
    for (EdgeId e : out.rotation(v2)) rot.push_back(e);
    std::vector<EdgeId> v2edges = out.rotation(v2);
    for (EdgeId e : v2edges) {
        auto [x, y] = out.endpoints(e);
        VertexId other = (x == v2) ? y : x;
        EdgeId ne = out.fresh_edge_id();
        out.add_edge_with_id(ne, v1, other);
        auto strip = [&](VertexId w) {
            auto order = out.rotation(w);
            auto it = std::find(order.rbegin(), order.rend(), ne);
            order.erase(std::next(it).base());
            out.set_rotation(w, order);
        };
        strip(v1);
        strip(other);
        out.replace_in_rotation(other, e, ne);
        {
            auto order = out.rotation(v1);
            auto it = std::find(order.begin(), order.end(), e);
            if (it != order.end()) *it = ne;
            else order.push_back(ne);
            out.set_rotation(v1, order);
        }
        out.remove_edge(e);
    }
    out.remove_vertex(v2);
    out.validate();
    return out;
}

std::vector<PlaneGraph> gen_corpus(CorpusClass cls, std::uint64_t seed, int count, int size_hint) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<PlaneGraph> out;
    int failures = 0;
    while (static_cast<int>(out.size()) < count) {
        if (failures > 80 * std::max(count, 1))
            throw GraphError(Err::GenerationFailed, "corpus generation retry cap exceeded");
        PlaneGraph g;
        switch (cls) {
            case CorpusClass::TwoConnCubicPlanar:
            case CorpusClass::TwoConnPlanarDelta3:
            case CorpusClass::TriangulationDeficient: {
                switch (pick(rng, 3)) {
                    case 0: g = shapes::k4(); break;
                    case 1: g = shapes::prism(3); break;
                    default: g = shapes::cube(); break;
                }
                while (g.num_vertices() < size_hint) {
                    size_t op = pick(rng, cls == CorpusClass::TwoConnCubicPlanar ? 3 : 4);
                    switch (op) {
                        case 0: g = op_hsplit(rng, g); break;
                        case 1: g = op_triangle_expand(rng, g); break;
                        case 2: g = op_two_cut_join(rng, g); break;
                        default: g = op_face_chord(rng, g); break;
                    }
                }
                break;
            }
            case CorpusClass::FourRegularPlanar: {
                switch (pick(rng, 4)) {
                    case 0: g = shapes::antiprism(3 + static_cast<int>(pick(rng, 4))); break;
                    case 1: g = four_regular_cutvertex_host(); break;
                    default: {
                        PlaneGraph base = shapes::k4();
                        while (base.num_vertices() < std::max(4, size_hint / 2)) {
                            if (pick(rng, 2) == 0) base = op_hsplit(rng, base);
                            else base = op_triangle_expand(rng, base);
                        }
                        g = medial_graph(base);
                        break;
                    }
                }
                break;
            }
        }
        g = normalize_ids(g).graph;
        if (matches_class(g, cls)) {
            out.push_back(g);
        } else {
            ++failures;
        }
    }
    return out;
}

}  // namespace planarforge
