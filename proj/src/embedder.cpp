#include "planarforge/embedder.hpp"

#include <algorithm>
#include <functional>

#include "planarforge/surgery.hpp"

namespace planarforge {

namespace {

struct Ear {
    // path of abstract edges from u to v through fresh internal vertices
    VertexId u, v;
    std::vector<VertexId> internal;
    std::vector<EdgeId> edges;  // |internal| + 1 edges
};

}  // namespace

PlaneGraph embed_biconnected(const std::vector<VertexId>& vertices,
                             const std::map<EdgeId, std::pair<VertexId, VertexId>>& edges) {
    if (vertices.size() > 64) throw GraphError(Err::TooSmall, "embedder cap is 64 vertices");
    if (vertices.size() < 3) throw GraphError(Err::TooSmall, "embedder needs >= 3 vertices");

    // adjacency
    std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
    for (VertexId v : vertices) adj[v] = {};
    for (const auto& [e, uv] : edges) {
        adj[uv.first].push_back({uv.second, e});
        adj[uv.second].push_back({uv.first, e});
    }

    // DFS-based open ear decomposition: first ear is a cycle, later ears are
    // paths whose interiors are new.
    std::map<VertexId, int> disc;
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
    std::vector<VertexId> order;
    int timer = 0;
    std::function<void(VertexId)> dfs = [&](VertexId a) {
        disc[a] = timer++;
        order.push_back(a);
        for (auto [b, e] : adj[a]) {
            if (!disc.count(b)) {
                parent[b] = {a, e};
                dfs(b);
            }
        }
    };
    dfs(vertices.front());
    if (disc.size() != vertices.size())
        throw GraphError(Err::NotBiconnected, "input graph is disconnected");

    std::set<EdgeId> placed;
    std::set<VertexId> placed_v;
    std::vector<Ear> ears;
    // back edges ordered by (disc of upper endpoint, disc of lower endpoint)
    std::vector<std::tuple<int, int, EdgeId, VertexId, VertexId>> backs;
    for (const auto& [e, uv] : edges) {
        auto [x, y] = uv;
        bool tree = (parent.count(x) && parent.at(x).second == e) ||
                    (parent.count(y) && parent.at(y).second == e);
        if (tree) continue;
        VertexId hi = disc[x] > disc[y] ? x : y;  // deeper endpoint
        VertexId lo = disc[x] > disc[y] ? y : x;
        backs.push_back({disc[lo], disc[hi], e, hi, lo});
    }
    std::sort(backs.begin(), backs.end());
    for (auto& [dl, dh, e, hi, lo] : backs) {
        bool first = ears.empty();
        if (!first && !placed_v.count(lo))
            throw GraphError(Err::NotBiconnected, "ear anchor missing");
        // climb from hi toward the root until hitting a placed vertex (or lo)
        VertexId cur = hi;
        std::vector<VertexId> internals;  // deepest first
        std::vector<EdgeId> climb;
        while (cur != lo && !placed_v.count(cur)) {
            auto [p, pe] = parent.at(cur);
            internals.push_back(cur);
            climb.push_back(pe);
            cur = p;
        }
        Ear ear;
        ear.u = cur;  // anchor (== lo for the first ear: a cycle)
        ear.v = lo;
        ear.internal.assign(internals.rbegin(), internals.rend());
        ear.edges.assign(climb.rbegin(), climb.rend());
        ear.edges.push_back(e);
        if (!first && ear.u == ear.v)
            throw GraphError(Err::NotBiconnected, "ear attaches at a single vertex");
        for (VertexId w : ear.internal) placed_v.insert(w);
        placed_v.insert(ear.u);
        placed_v.insert(ear.v);
        for (EdgeId pe : ear.edges) placed.insert(pe);
        ears.push_back(ear);
    }
    if (ears.empty()) throw GraphError(Err::NotBiconnected, "no cycle found");
    if (placed.size() != edges.size() || placed_v.size() != vertices.size())
        throw GraphError(Err::NotBiconnected, "open ear decomposition failed");
    if (ears.front().u != ears.front().v)
        throw GraphError(Err::NotBiconnected, "first ear is not a cycle");

    // Backtrack over the face hosting each ear. The working graph uses local
    // ids; mapping back to the abstract ids happens at the end.
    PlaneGraph base;
    std::map<VertexId, VertexId> vmap;   // abstract -> local
    std::map<EdgeId, EdgeId> emap_back;  // local -> abstract

    // ear 0: plain cycle
    {
        const Ear& c = ears.front();
        std::vector<VertexId> cyc;
        cyc.push_back(c.u);
        for (VertexId w : c.internal) cyc.push_back(w);
        for (VertexId w : cyc) vmap[w] = base.add_vertex();
        for (size_t i = 0; i < cyc.size(); ++i) {
            EdgeId le = base.add_edge(vmap[cyc[i]], vmap[cyc[(i + 1) % cyc.size()]]);
            emap_back[le] = c.edges[i];
        }
        // fix rotations into cycle order
        for (size_t i = 0; i < cyc.size(); ++i) {
            VertexId lv = vmap[cyc[i]];
            std::vector<EdgeId> rot = base.rotation(lv);
            std::sort(rot.begin(), rot.end());
            base.set_rotation(lv, rot);
        }
    }

    long steps = 0;
    const long kStepCap = 500000;

    std::function<bool(PlaneGraph&, size_t)> place = [&](PlaneGraph& g, size_t idx) -> bool {
        if (idx == ears.size()) return true;
        if (++steps > kStepCap)
            throw GraphError(Err::NotPlanarEmbedding, "embedder step budget exhausted");
        const Ear& ear = ears[idx];
        VertexId lu = vmap.at(ear.u), lv_ = vmap.at(ear.v);
        const auto& fs = g.faces();
        for (size_t fi = 0; fi < fs.size(); ++fi) {
            // collect corners (departing darts) of lu and lv on this face
            std::vector<Dart> cu, cv;
            for (const Dart& d : fs[fi].walk) {
                if (d.tail == lu) cu.push_back(d);
                if (d.tail == lv_) cv.push_back(d);
            }
            for (const Dart& du : cu)
                for (const Dart& dv : cv) {
                    PlaneGraph trial = g;
                    EdgeId chord = insert_edge_in_face(trial, du, dv);
                    std::vector<VertexId> mids;
                    std::vector<EdgeId> segs;
                    subdivide_edge_inplace(trial, chord, static_cast<int>(ear.internal.size()),
                                           &mids, &segs);
                    // record ids
                    std::vector<std::pair<VertexId, VertexId>> vadd;
                    for (size_t i = 0; i < ear.internal.size(); ++i)
                        vadd.push_back({ear.internal[i], mids[i]});
                    std::vector<std::pair<EdgeId, EdgeId>> eadd;
                    for (size_t i = 0; i < segs.size(); ++i) eadd.push_back({segs[i], ear.edges[i]});
                    for (auto [av, lv2] : vadd) vmap[av] = lv2;
                    for (auto [le, ae] : eadd) emap_back[le] = ae;
                    if (place(trial, idx + 1)) {
                        g = trial;
                        return true;
                    }
                    for (auto [av, lv2] : vadd) vmap.erase(av);
                    for (auto [le, ae] : eadd) emap_back.erase(le);
                }
        }
        return false;
    };

    PlaneGraph work = base;
    if (!place(work, 1))
        throw GraphError(Err::NotPlanarEmbedding, "graph admits no planar embedding");

    // translate back to the abstract ids
    std::map<VertexId, VertexId> vback;
    for (const auto& [av, lv] : vmap) vback[lv] = av;
    std::map<EdgeId, std::pair<VertexId, VertexId>> es;
    for (const auto& [e, uv] : edges) es[e] = uv;
    std::map<VertexId, std::vector<EdgeId>> rots;
    for (VertexId lv : work.vertices()) {
        std::vector<EdgeId> r;
        for (EdgeId le : work.rotation(lv)) r.push_back(emap_back.at(le));
        rots[vback.at(lv)] = r;
    }
    return PlaneGraph::build(vertices, es, rots);
}

}  // namespace planarforge
