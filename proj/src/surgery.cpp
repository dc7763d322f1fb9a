#include "planarforge/surgery.hpp"

#include <algorithm>

namespace planarforge {

void subdivide_edge_inplace(PlaneGraph& g, EdgeId e, int t,
                            std::vector<VertexId>* new_vertices,
                            std::vector<EdgeId>* segments) {
    if (t < 0) throw GraphError(Err::Internal, "subdivide_edge: negative count");
    if (new_vertices) new_vertices->clear();
    if (segments) segments->clear();
    if (t == 0) {
        if (segments) segments->push_back(e);
        return;
    }
    auto [u, v] = g.endpoints(e);
    std::optional<Dart> outer = g.outer_dart();

    std::vector<VertexId> mids;
    for (int i = 0; i < t; ++i) mids.push_back(g.add_vertex());
    std::vector<EdgeId> segs;
    // chain u = c0 - c1 - ... - c_{t+1} = v
    std::vector<VertexId> chain;
    chain.push_back(u);
    for (VertexId m : mids) chain.push_back(m);
    chain.push_back(v);
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        EdgeId s = g.fresh_edge_id();
        // endpoints recorded (chain[i], chain[i+1]) so dart tails stay meaningful
        g.add_edge_with_id(s, chain[i], chain[i + 1]);
        segs.push_back(s);
    }
    // fix rotations: u keeps e's slot for segs[0], v for segs.back(); the
    // appended copies from add_edge_with_id are removed again.
    auto strip_tail = [&](VertexId w, EdgeId s) {
        auto order = g.rotation(w);
        auto it = std::find(order.rbegin(), order.rend(), s);
        order.erase(std::next(it).base());
        g.set_rotation(w, order);
    };
    strip_tail(u, segs.front());
    strip_tail(v, segs.back());
    g.replace_in_rotation(u, e, segs.front());
    g.replace_in_rotation(v, e, segs.back());
    for (int i = 0; i < t; ++i) g.set_rotation(mids[i], {segs[i], segs[i + 1]});
    // e's rotation slots were all rewritten; this only drops the record
    g.remove_edge(e);

    if (outer && outer->edge == e) {
        if (outer->tail == u)
            g.set_outer(Dart{segs.front(), u});
        else
            g.set_outer(Dart{segs.back(), v});
    } else if (outer) {
        g.set_outer(outer);
    }
    if (new_vertices) *new_vertices = mids;
    if (segments) *segments = segs;
}

SubdivideResult subdivide_edge(const PlaneGraph& g, EdgeId e, int t) {
    SubdivideResult r;
    r.graph = g;
    subdivide_edge_inplace(r.graph, e, t, &r.new_vertices, &r.segments);
    return r;
}

EdgeId insert_edge_in_face(PlaneGraph& g, Dart corner_u, Dart corner_v) {
    if (corner_u == corner_v)
        throw GraphError(Err::Internal, "insert_edge_in_face: identical corners");
    if (g.face_of(corner_u) != g.face_of(corner_v))
        throw GraphError(Err::NoSharedFace, "corners lie on different faces");
    VertexId u = corner_u.tail, v = corner_v.tail;
    if (u == v) throw GraphError(Err::Internal, "insert_edge_in_face: loop");
    return g.add_edge_before(u, v, corner_u.edge, corner_v.edge);
}

HSplitRecord h_split_at(PlaneGraph& g, Dart d1, Dart d2) {
    if (d1.edge == d2.edge) throw GraphError(Err::SameEdge, "h_split on a single edge");
    if (g.face_of(d1) != g.face_of(d2))
        throw GraphError(Err::NoSharedFace, "h_split darts on different faces");

    HSplitRecord rec;
    rec.e1 = d1.edge;
    rec.e2 = d2.edge;

    std::vector<VertexId> mids;
    std::vector<EdgeId> segs;
    subdivide_edge_inplace(g, d1.edge, 1, &mids, &segs);
    rec.new_v1 = mids[0];
    // orient halves tail-first relative to d1
    auto [a1, b1] = g.endpoints(segs[0]);
    (void)b1;
    if (a1 == d1.tail || g.other_end(segs[0], rec.new_v1) == d1.tail)
        rec.halves1 = {segs[0], segs[1]};
    else
        rec.halves1 = {segs[1], segs[0]};

    subdivide_edge_inplace(g, d2.edge, 1, &mids, &segs);
    rec.new_v2 = mids[0];
    if (g.other_end(segs[0], rec.new_v2) == d2.tail)
        rec.halves2 = {segs[0], segs[1]};
    else
        rec.halves2 = {segs[1], segs[0]};

    // Corner at new_v1 in the (subdivided) shared face: arrival along
    // halves1.first, departure along halves1.second.
    Dart c1{rec.halves1.second, rec.new_v1};
    Dart c2{rec.halves2.second, rec.new_v2};
    rec.cross_edge = insert_edge_in_face(g, c1, c2);
    return rec;
}

static std::pair<Dart, Dart> find_shared_face_darts(const PlaneGraph& g, EdgeId e1, EdgeId e2) {
    if (e1 == e2) throw GraphError(Err::SameEdge, "pair must be two distinct edges");
    g.endpoints(e1);
    g.endpoints(e2);
    for (const Face& f : g.faces()) {
        std::optional<Dart> d1, d2;
        for (const Dart& d : f.walk) {
            if (d.edge == e1 && !d1) d1 = d;
            if (d.edge == e2 && !d2) d2 = d;
        }
        if (d1 && d2) return {*d1, *d2};
    }
    throw GraphError(Err::NoSharedFace, "edges are not incident to a common face");
}

std::pair<PlaneGraph, HSplitRecord> h_split(const PlaneGraph& g, EdgeId e1, EdgeId e2) {
    auto [d1, d2] = find_shared_face_darts(g, e1, e2);
    PlaneGraph out = g;
    HSplitRecord rec = h_split_at(out, d1, d2);
    return {std::move(out), rec};
}

/// Linearized clockwise rotation of a gadget attachment vertex, cut at its
/// outer-face corner: starts with the outer departure edge.
static std::vector<EdgeId> attachment_arc(const PlaneGraph& gadget, VertexId a) {
    if (gadget.degree(a) == 0) return {};
    if (!gadget.outer_dart())
        throw GraphError(Err::Internal, "gadget needs a designated outer face");
    const Face& outer = gadget.faces()[*gadget.outer_face_index()];
    std::optional<EdgeId> dep;
    int hits = 0;
    for (const Dart& d : outer.walk)
        if (d.tail == a) {
            dep = d.edge;
            ++hits;
        }
    if (hits != 1)
        throw GraphError(Err::Internal, "attachment must appear exactly once on gadget boundary");
    const auto& rot = gadget.rotation(a);
    auto it = std::find(rot.begin(), rot.end(), *dep);
    std::vector<EdgeId> arc(it, rot.end());
    arc.insert(arc.end(), rot.begin(), it);
    return arc;
}

SubstituteResult substitute_pair(const PlaneGraph& g, EdgeId e1, EdgeId e2,
                                 const PairGadget& gadget) {
    auto [d1, d2] = find_shared_face_darts(g, e1, e2);
    const Face& shared = g.faces()[g.face_of(d1)];

    PlaneGraph out = g;
    SubstituteResult res;

    // attachment spots in face-walk order
    struct Spot {
        VertexId host;
        EdgeId removed;
        VertexId gadget_attach;
    };
    std::array<Spot, 4> spots = {
        Spot{d1.tail, e1, gadget.attach[0]},
        Spot{g.head(d1), e1, gadget.attach[1]},
        Spot{d2.tail, e2, gadget.attach[2]},
        Spot{g.head(d2), e2, gadget.attach[3]},
    };

    // id maps
    std::map<VertexId, VertexId>& vmap = res.vertex_map;
    for (int i = 0; i < 4; ++i) {
        if (!gadget.graph.has_vertex(spots[i].gadget_attach))
            throw GraphError(Err::Internal, "bad gadget attachment vertex");
        vmap[spots[i].gadget_attach] = spots[i].host;
    }
    for (VertexId v : gadget.graph.vertices()) {
        if (vmap.count(v)) continue;
        VertexId nv = out.add_vertex();
        vmap[v] = nv;
    }
    std::map<EdgeId, EdgeId>& emap = res.edge_map;
    for (EdgeId e : gadget.graph.edge_ids()) {
        auto [a, b] = gadget.graph.endpoints(e);
        EdgeId ne = out.fresh_edge_id();
        out.add_edge_with_id(ne, vmap.at(a), vmap.at(b));
        emap[e] = ne;
    }
    // internal rotations verbatim
    for (VertexId v : gadget.graph.vertices()) {
        bool is_attach = false;
        for (const Spot& s : spots) is_attach |= (s.gadget_attach == v);
        if (is_attach) continue;
        std::vector<EdgeId> order;
        for (EdgeId e : gadget.graph.rotation(v)) order.push_back(emap.at(e));
        out.set_rotation(vmap.at(v), order);
    }
    // host rotations: replace each removed-edge slot by the attachment arc
    for (VertexId h : {d1.tail, g.head(d1), d2.tail, g.head(d2)}) {
        std::vector<EdgeId> order;
        for (EdgeId e : g.rotation(h)) {
            bool patched = false;
            for (const Spot& s : spots) {
                if (s.host == h && s.removed == e && !patched) {
                    // distinguish the two spots of a removed edge by endpoint
                    // (h occurs once per edge end; no loops)
                    for (EdgeId ge : attachment_arc(gadget.graph, s.gadget_attach))
                        order.push_back(emap.at(ge));
                    patched = true;
                }
            }
            if (!patched) order.push_back(e);
        }
        out.set_rotation(h, order);
    }
    // drop the replaced edges; their rotation slots are already rewritten,
    // so strip any stale occurrences first (none expected) then erase records
    for (EdgeId e : {e1, e2}) out.remove_edge(e);

    // outer-face bookkeeping
    if (auto od = g.outer_dart()) {
        if (od->edge == e1 || od->edge == e2) {
            std::optional<Dart> repl;
            for (const Dart& d : shared.walk)
                if (d.edge != e1 && d.edge != e2) {
                    repl = d;
                    break;
                }
            out.set_outer(repl);
        } else {
            out.set_outer(od);
        }
    }

    try {
        out.validate();
    } catch (const GraphError&) {
        throw GraphError(Err::AttachmentOrderIncompatible,
                         "substitution does not extend to a planar embedding");
    }
    res.graph = std::move(out);
    return res;
}

std::optional<PlaneGraph> suppress_degree2(const PlaneGraph& g, const std::set<VertexId>& keep) {
    PlaneGraph out = g;
    bool again = true;
    while (again) {
        again = false;
        for (VertexId v : out.vertices()) {
            if (keep.count(v) || out.degree(v) != 2) continue;
            EdgeId a = out.rotation(v)[0];
            EdgeId b = out.rotation(v)[1];
            VertexId p = out.other_end(a, v);
            VertexId q = out.other_end(b, v);
            if (p == q && a != b) return std::nullopt;  // would create a loop
            if (a == b) return std::nullopt;             // should not happen (loopless)
            std::optional<Dart> outer = out.outer_dart();
            EdgeId n = out.fresh_edge_id();
            out.add_edge_with_id(n, p, q);
            // strip the appended copies, then splice n into a's and b's slots
            auto strip_tail = [&](VertexId w) {
                auto order = out.rotation(w);
                auto it = std::find(order.rbegin(), order.rend(), n);
                order.erase(std::next(it).base());
                out.set_rotation(w, order);
            };
            strip_tail(p);
            strip_tail(q);
            out.replace_in_rotation(p, a, n);
            out.replace_in_rotation(q, b, n);
            out.set_rotation(v, {});
            // remove old records
            out.remove_edge(a);
            out.remove_edge(b);
            out.remove_vertex(v);
            if (outer) {
                Dart od = *outer;
                if (od.edge == a) out.set_outer(Dart{n, od.tail == v ? q : p});
                else if (od.edge == b) out.set_outer(Dart{n, od.tail == v ? p : q});
                else out.set_outer(od);
            }
            again = true;
            break;
        }
    }
    return out;
}

static std::vector<EdgeId> arc_after(const PlaneGraph& g, VertexId w, EdgeId at) {
    const auto& rot = g.rotation(w);
    auto it = std::find(rot.begin(), rot.end(), at);
    if (it == rot.end()) throw GraphError(Err::Internal, "arc_after: missing edge");
    std::vector<EdgeId> arc(std::next(it), rot.end());
    arc.insert(arc.end(), rot.begin(), it);
    return arc;
}

void splice_expansion(PlaneGraph& g, EdgeId virtual_edge, const PlaneGraph& child) {
    auto [u, v] = g.endpoints(virtual_edge);
    for (VertexId w : child.vertices())
        if (!g.has_vertex(w)) g.add_vertex_with_id(w);
    for (EdgeId e : child.edge_ids()) {
        if (e == virtual_edge) continue;
        auto [a, b] = child.endpoints(e);
        g.add_edge_with_id(e, a, b);
    }
    for (VertexId w : child.vertices()) {
        if (w == u || w == v) continue;
        g.set_rotation(w, child.rotation(w));
    }
    for (VertexId w : {u, v}) {
        std::vector<EdgeId> arc = arc_after(child, w, virtual_edge);
        std::vector<EdgeId> order;
        for (EdgeId e : g.rotation(w)) {
            if (e == virtual_edge) {
                for (EdgeId a : arc) order.push_back(a);
            } else if (!child.has_edge(e)) {
                order.push_back(e);
            }
        }
        g.set_rotation(w, order);
    }
    g.remove_edge(virtual_edge);
}

NormalizeResult normalize_ids(const PlaneGraph& g) {
    NormalizeResult r;
    VertexId nv = 0;
    for (VertexId v : g.vertices()) r.vertex_map[v] = nv++;
    EdgeId ne = 0;
    for (EdgeId e : g.edge_ids()) r.edge_map[e] = ne++;

    std::vector<VertexId> vs;
    for (int i = 0; i < nv; ++i) vs.push_back(i);
    std::map<EdgeId, std::pair<VertexId, VertexId>> edges;
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.endpoints(e);
        edges[r.edge_map[e]] = {r.vertex_map[u], r.vertex_map[v]};
    }
    std::map<VertexId, std::vector<EdgeId>> rot;
    for (VertexId v : g.vertices()) {
        std::vector<EdgeId> order;
        for (EdgeId e : g.rotation(v)) order.push_back(r.edge_map[e]);
        rot[r.vertex_map[v]] = order;
    }
    r.graph = PlaneGraph::build(vs, edges, rot);
    if (auto od = g.outer_dart())
        r.graph.set_outer(Dart{r.edge_map.at(od->edge), r.vertex_map.at(od->tail)});
    return r;
}

CopyMaps copy_into(PlaneGraph& dst, const PlaneGraph& src) {
    CopyMaps m;
    for (VertexId v : src.vertices()) m.vertex_map[v] = dst.add_vertex();
    for (EdgeId e : src.edge_ids()) {
        auto [u, v] = src.endpoints(e);
        EdgeId ne = dst.fresh_edge_id();
        dst.add_edge_with_id(ne, m.vertex_map.at(u), m.vertex_map.at(v));
        m.edge_map[e] = ne;
    }
    for (VertexId v : src.vertices()) {
        std::vector<EdgeId> order;
        for (EdgeId e : src.rotation(v)) order.push_back(m.edge_map.at(e));
        dst.set_rotation(m.vertex_map.at(v), order);
    }
    return m;
}

}  // namespace planarforge
