#include "planarforge/spqr.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "planarforge/connectivity.hpp"
#include "planarforge/surgery.hpp"

namespace planarforge {

const char* node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::S: return "S";
        case NodeKind::P: return "P";
        case NodeKind::Q: return "Q";
        case NodeKind::R: return "R";
    }
    return "?";
}

namespace {

struct CEdge {
    EdgeId id;  // host id for real edges, fresh id for virtual ones
    VertexId u, v;
    bool real;
};

struct Comp {
    std::vector<CEdge> edges;

    std::set<VertexId> vertices() const {
        std::set<VertexId> vs;
        for (const CEdge& e : edges) {
            vs.insert(e.u);
            vs.insert(e.v);
        }
        return vs;
    }
    bool is_bond() const { return vertices().size() == 2; }
    bool is_cycle() const {
        std::map<VertexId, int> deg;
        for (const CEdge& e : edges) {
            deg[e.u]++;
            deg[e.v]++;
        }
        if (deg.size() != edges.size()) return false;
        for (const auto& [v, d] : deg)
            if (d != 2) return false;
        // connectivity: a 2-regular graph is a disjoint union of cycles
        std::map<VertexId, std::vector<VertexId>> adj;
        for (const CEdge& e : edges) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::set<VertexId> seen;
        std::queue<VertexId> q;
        q.push(adj.begin()->first);
        seen.insert(adj.begin()->first);
        while (!q.empty()) {
            VertexId a = q.front();
            q.pop();
            for (VertexId b : adj.at(a))
                if (seen.insert(b).second) q.push(b);
        }
        return seen.size() == deg.size();
    }
};

// simple-graph census over a component
std::optional<std::pair<VertexId, VertexId>> find_parallel_pair(const Comp& c) {
    std::map<std::pair<VertexId, VertexId>, int> cnt;
    for (const CEdge& e : c.edges) {
        auto key = std::minmax(e.u, e.v);
        cnt[{key.first, key.second}]++;
    }
    for (const auto& [key, n] : cnt)
        if (n >= 2) return key;
    return std::nullopt;
}

std::optional<std::pair<VertexId, VertexId>> find_disconnecting_pair(const Comp& c) {
    std::set<VertexId> vset = c.vertices();
    std::vector<VertexId> vs(vset.begin(), vset.end());
    if (vs.size() < 4) return std::nullopt;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const CEdge& e : c.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            VertexId x = vs[i], y = vs[j];
            std::set<VertexId> seen{x, y};
            std::optional<VertexId> start;
            for (VertexId v : vs)
                if (v != x && v != y) {
                    start = v;
                    break;
                }
            if (!start) continue;
            std::queue<VertexId> q;
            q.push(*start);
            seen.insert(*start);
            size_t cnt = 1;
            while (!q.empty()) {
                VertexId a = q.front();
                q.pop();
                for (VertexId b : adj.at(a))
                    if (!seen.count(b)) {
                        seen.insert(b);
                        ++cnt;
                        q.push(b);
                    }
            }
            if (cnt != vs.size() - 2) return std::make_pair(x, y);
        }
    return std::nullopt;
}

}  // namespace

class SpqrBuilder {
  public:
    SpqrBuilder(const PlaneGraph& host, EdgeId root_edge) : host_(host), root_edge_(root_edge) {
        next_virtual_ = host.fresh_edge_id();
    }

    SPQRTree run() {
        if (host_.num_edges() < 3) throw GraphError(Err::TooSmall, "SPQR needs >= 3 edges");
        if (!is_biconnected(host_)) throw GraphError(Err::NotBiconnected, "SPQR needs a biconnected host");
        if (!host_.has_edge(root_edge_)) throw GraphError(Err::Internal, "unknown root edge");

        Comp whole;
        for (EdgeId e : host_.edge_ids()) {
            auto [u, v] = host_.endpoints(e);
            whole.edges.push_back({e, u, v, true});
        }
        split(std::move(whole));
        merge_components();
        build_tree();

        SPQRTree t;
        t.host_ = host_;
        t.root_ = root_id_;
        t.nodes_ = std::move(nodes_);
        return t;
    }

  private:
    void split(Comp c) {
        // parallel bundles first
        if (c.vertices().size() > 2) {
            if (auto pp = find_parallel_pair(c)) {
                auto [x, y] = *pp;
                Comp bundle, rest;
                for (const CEdge& e : c.edges) {
                    auto key = std::minmax(e.u, e.v);
                    if (key == std::minmax(x, y)) bundle.edges.push_back(e);
                    else rest.edges.push_back(e);
                }
                EdgeId link = next_virtual_++;
                bundle.edges.push_back({link, x, y, false});
                rest.edges.push_back({link, x, y, false});
                split(std::move(bundle));
                split(std::move(rest));
                return;
            }
            if (auto dp = find_disconnecting_pair(c)) {
                auto [x, y] = *dp;
                // separation class: the component containing the lowest vertex
                std::map<VertexId, std::vector<std::pair<VertexId, int>>> adj;
                for (size_t i = 0; i < c.edges.size(); ++i) {
                    const CEdge& e = c.edges[i];
                    adj[e.u].push_back({e.v, static_cast<int>(i)});
                    adj[e.v].push_back({e.u, static_cast<int>(i)});
                }
                std::optional<VertexId> seed;
                for (VertexId v : c.vertices())
                    if (v != x && v != y) {
                        seed = v;
                        break;
                    }
                std::set<VertexId> side{*seed};
                std::queue<VertexId> q;
                q.push(*seed);
                while (!q.empty()) {
                    VertexId a = q.front();
                    q.pop();
                    for (auto [b, ei] : adj.at(a)) {
                        if (b == x || b == y || side.count(b)) continue;
                        side.insert(b);
                        q.push(b);
                    }
                }
                Comp part, rest;
                for (const CEdge& e : c.edges) {
                    bool in_part = side.count(e.u) || side.count(e.v);
                    (in_part ? part : rest).edges.push_back(e);
                }
                EdgeId link = next_virtual_++;
                part.edges.push_back({link, x, y, false});
                rest.edges.push_back({link, x, y, false});
                split(std::move(part));
                split(std::move(rest));
                return;
            }
        }
        comps_.push_back(std::move(c));
    }

    void merge_components() {
        bool again = true;
        while (again) {
            again = false;
            // virtual id -> component indices
            std::map<EdgeId, std::vector<int>> where;
            for (size_t i = 0; i < comps_.size(); ++i)
                for (const CEdge& e : comps_[i].edges)
                    if (!e.real) where[e.id].push_back(static_cast<int>(i));
            for (const auto& [link, locs] : where) {
                if (locs.size() != 2)
                    throw GraphError(Err::Internal, "virtual edge without exactly two sides");
                Comp& a = comps_[locs[0]];
                Comp& b = comps_[locs[1]];
                if (locs[0] == locs[1]) throw GraphError(Err::Internal, "self-linked component");
                bool both_bond = a.is_bond() && b.is_bond();
                bool both_cycle = a.is_cycle() && b.is_cycle();
                if (!both_bond && !both_cycle) continue;
                Comp merged;
                for (const CEdge& e : a.edges)
                    if (e.id != link) merged.edges.push_back(e);
                for (const CEdge& e : b.edges)
                    if (e.id != link) merged.edges.push_back(e);
                comps_[locs[0]] = std::move(merged);
                comps_.erase(comps_.begin() + locs[1]);
                again = true;
                break;
            }
        }
        // deterministic component order: by lowest real edge id (fall back to
        // lowest virtual id)
        std::sort(comps_.begin(), comps_.end(), [](const Comp& a, const Comp& b) {
            auto key = [](const Comp& c) {
                EdgeId real = -1, any = c.edges.front().id;
                for (const CEdge& e : c.edges) {
                    any = std::min(any, e.id);
                    if (e.real) real = real < 0 ? e.id : std::min(real, e.id);
                }
                return std::pair<EdgeId, EdgeId>(real < 0 ? any + 1000000 : real, any);
            };
            return key(a) < key(b);
        });
    }

    // ---- tree construction -------------------------------------------------

    int fresh_node() {
        int id = static_cast<int>(nodes_.size());
        nodes_[id];
        nodes_[id].id = id;
        return id;
    }

    void build_tree() {
        // locate the component holding the root edge
        int top = -1;
        for (size_t i = 0; i < comps_.size(); ++i)
            for (const CEdge& e : comps_[i].edges)
                if (e.real && e.id == root_edge_) top = static_cast<int>(i);
        if (top < 0) throw GraphError(Err::Internal, "root edge not in any component");

        std::map<EdgeId, std::vector<int>> where;
        for (size_t i = 0; i < comps_.size(); ++i)
            for (const CEdge& e : comps_[i].edges)
                if (!e.real) where[e.id].push_back(static_cast<int>(i));

        // root Q node
        root_id_ = fresh_node();
        SPQRNode& root = nodes_[root_id_];
        root.kind = NodeKind::Q;
        root.host_edge = root_edge_;
        auto [ru, rv] = host_.endpoints(root_edge_);
        root.pole_u = ru;
        root.pole_v = rv;
        root.parent = -1;
        root.parent_edge = -1;  // the root has no parent side
        {
            PlaneGraph sk;
            sk.add_vertex_with_id(ru);
            sk.add_vertex_with_id(rv);
            sk.add_edge_with_id(root_edge_, ru, rv);
            root.skeleton = sk;
            root.real_edges = {root_edge_};
        }

        std::map<int, int> comp_node;  // comp index -> node id
        // BFS from the top component; entry edge of top = the root edge itself
        std::queue<std::tuple<int, EdgeId, int>> bfs;  // comp, entry edge, parent node
        bfs.push({top, root_edge_, root_id_});
        std::set<int> seen{top};
        while (!bfs.empty()) {
            auto [ci, entry, parent_node] = bfs.front();
            bfs.pop();
            const Comp& c = comps_[ci];
            int id = fresh_node();
            comp_node[ci] = id;
            SPQRNode& n = nodes_[id];
            n.parent = parent_node;
            n.parent_edge = entry;
            if (parent_node == root_id_) nodes_[root_id_].children[root_edge_] = id;

            // classify
            if (c.is_bond()) n.kind = NodeKind::P;
            else if (c.is_cycle()) n.kind = NodeKind::S;
            else n.kind = NodeKind::R;

            // poles: endpoints of the entry edge
            for (const CEdge& e : c.edges)
                if (e.id == entry) {
                    n.pole_u = std::min(e.u, e.v);
                    n.pole_v = std::max(e.u, e.v);
                }

            for (const CEdge& e : c.edges) {
                if (e.real) n.real_edges.insert(e.id);
                if (e.id == entry) continue;
                if (e.real) {
                    // Q leaf
                    int q = fresh_node();
                    SPQRNode& qn = nodes_[q];
                    qn.kind = NodeKind::Q;
                    qn.host_edge = e.id;
                    qn.pole_u = std::min(e.u, e.v);
                    qn.pole_v = std::max(e.u, e.v);
                    qn.parent = id;
                    qn.parent_edge = e.id;
                    PlaneGraph sk;
                    sk.add_vertex_with_id(e.u);
                    sk.add_vertex_with_id(e.v);
                    sk.add_edge_with_id(e.id, e.u, e.v);
                    qn.skeleton = sk;
                    qn.real_edges = {e.id};
                    qn.pert_edges = {e.id};
                    n.children[e.id] = q;
                } else {
                    const auto& locs = where.at(e.id);
                    int other = locs[0] == ci ? locs[1] : locs[0];
                    if (!seen.insert(other).second)
                        throw GraphError(Err::Internal, "component cycle in SPQR tree");
                    bfs.push({other, e.id, id});
                }
            }
        }
        // resolve child links for virtual edges now that every comp has a node
        for (const auto& [ci, nid] : comp_node) {
            SPQRNode& n = nodes_[nid];
            for (const CEdge& e : comps_[ci].edges) {
                if (e.real || e.id == n.parent_edge) continue;
                const auto& locs = where.at(e.id);
                int other = locs[0] == ci ? locs[1] : locs[0];
                n.children[e.id] = comp_node.at(other);
            }
        }

        // pertinent edge sets first (slot resolution needs them), then
        // skeleton embeddings inherited from the host
        compute_pert_edges(root_id_);
        for (const auto& [ci, nid] : comp_node) embed_component(comps_[ci], nodes_[nid]);

        // checks on tree shape
        for (const auto& [nid, n] : nodes_) {
            if (n.kind == NodeKind::S && n.skeleton.num_edges() < 3)
                throw GraphError(Err::Internal, "S skeleton too small");
            if (n.kind == NodeKind::P && n.skeleton.num_edges() < 3)
                throw GraphError(Err::Internal, "P skeleton too small");
            if (n.parent >= 0) {
                const SPQRNode& p = nodes_.at(n.parent);
                if (p.kind == n.kind && (n.kind == NodeKind::S || n.kind == NodeKind::P))
                    throw GraphError(Err::Internal, "adjacent equal S/P nodes survived merging");
            }
        }
    }

    void embed_component(const Comp& c, SPQRNode& n) {
        std::set<VertexId> vs = c.vertices();
        std::map<EdgeId, std::pair<VertexId, VertexId>> edges;
        for (const CEdge& e : c.edges) edges[e.id] = {e.u, e.v};

        std::map<VertexId, std::vector<EdgeId>> rot;
        for (VertexId w : vs) {
            std::vector<EdgeId> slots;
            for (EdgeId he : host_.rotation(w)) slots.push_back(slot_of(n, he));
            // compress cyclic runs into one entry per skeleton edge
            std::vector<EdgeId> order;
            size_t m = slots.size();
            size_t start = 0;
            while (start < m && slots[(start + m - 1) % m] == slots[start]) ++start;
            if (start == m) {
                order.push_back(slots[0]);  // single skeleton edge at w
            } else {
                EdgeId last = -1;
                for (size_t k = 0; k < m; ++k) {
                    EdgeId s = slots[(start + k) % m];
                    if (s != last) order.push_back(s);
                    last = s;
                }
            }
            std::set<EdgeId> uniq(order.begin(), order.end());
            if (uniq.size() != order.size())
                throw GraphError(Err::Internal, "skeleton slot runs not contiguous");
            rot[w] = order;
        }
        n.skeleton = PlaneGraph::build(std::vector<VertexId>(vs.begin(), vs.end()), edges, rot);
    }

    /// Skeleton edge of n that the host edge falls under.
    EdgeId slot_of(const SPQRNode& n, EdgeId host_edge) {
        if (n.real_edges.count(host_edge)) return host_edge;
        for (const auto& [e, child] : n.children)
            if (nodes_.at(child).pert_edges.count(host_edge)) return e;
        return n.parent_edge;
    }

    PlaneGraph host_;
    EdgeId root_edge_;
    EdgeId next_virtual_;
    std::vector<Comp> comps_;
    std::map<int, SPQRNode> nodes_;
    int root_id_ = -1;

    void compute_pert_edges(int id) {
        SPQRNode& n = nodes_[id];
        if (n.kind == NodeKind::Q && n.parent >= 0) {
            n.pert_edges = {n.host_edge};
            return;
        }
        n.pert_edges.clear();
        for (const auto& [e, child] : n.children) {
            compute_pert_edges(child);
            const auto& ce = nodes_[child].pert_edges;
            n.pert_edges.insert(ce.begin(), ce.end());
        }
        if (id == root_id_) n.pert_edges.insert(root_edge_);
    }
};

SPQRTree SPQRTree::build(const PlaneGraph& host, EdgeId root_edge) {
    return SpqrBuilder(host, root_edge).run();
}

std::vector<int> SPQRTree::node_ids() const {
    std::vector<int> out;
    for (const auto& [id, n] : nodes_) out.push_back(id);
    return out;
}

PlaneGraph SPQRTree::pertinent_graph(int id) const {
    const SPQRNode& n = nodes_.at(id);
    if (id == root_) return host_;
    if (n.kind == NodeKind::Q) {
        PlaneGraph g;
        auto [u, v] = host_.endpoints(n.host_edge);
        g.add_vertex_with_id(u);
        g.add_vertex_with_id(v);
        g.add_edge_with_id(n.host_edge, u, v);
        return g;
    }
    // induced embedded subgraph of the pertinent edges, plus the parent edge
    std::set<VertexId> vs;
    for (EdgeId e : n.pert_edges) {
        auto [u, v] = host_.endpoints(e);
        vs.insert(u);
        vs.insert(v);
    }
    std::map<EdgeId, std::pair<VertexId, VertexId>> edges;
    for (EdgeId e : n.pert_edges) edges[e] = host_.endpoints(e);
    edges[n.parent_edge] = {n.pole_u, n.pole_v};

    std::map<VertexId, std::vector<EdgeId>> rot;
    for (VertexId w : vs) {
        const auto& hr = host_.rotation(w);
        bool pole = (w == n.pole_u || w == n.pole_v);
        if (!pole) {
            std::vector<EdgeId> order;
            for (EdgeId e : hr)
                if (n.pert_edges.count(e)) order.push_back(e);
            if (order.size() != hr.size())
                throw GraphError(Err::Internal, "interior pert vertex with outside edges");
            rot[w] = order;
            continue;
        }
        // outside edges form one cyclic run; the parent edge takes its place
        size_t m = hr.size();
        auto outside = [&](EdgeId e) { return !n.pert_edges.count(e); };
        size_t start = m;
        for (size_t k = 0; k < m; ++k)
            if (outside(hr[(k + m - 1) % m]) && !outside(hr[k])) {
                start = k;
                break;
            }
        if (start == m) throw GraphError(Err::Internal, "pole without outside run");
        std::vector<EdgeId> order;
        bool seen_outside = false;
        for (size_t k = 0; k < m; ++k) {
            EdgeId e = hr[(start + k) % m];
            if (outside(e)) {
                seen_outside = true;
            } else {
                if (seen_outside)
                    throw GraphError(Err::Internal, "outside edges not contiguous at pole");
                order.push_back(e);
            }
        }
        order.push_back(n.parent_edge);
        rot[w] = order;
    }
    PlaneGraph g = PlaneGraph::build(std::vector<VertexId>(vs.begin(), vs.end()), edges, rot);
    return g;
}

PlaneGraph SPQRTree::expansion_graph(int node_id, EdgeId virtual_edge) const {
    const SPQRNode& n = nodes_.at(node_id);
    if (virtual_edge == n.parent_edge)
        throw GraphError(Err::IsParentEdge, "expansion of the parent edge is undefined");
    auto it = n.children.find(virtual_edge);
    if (it == n.children.end()) throw GraphError(Err::Internal, "unknown skeleton edge");
    const SPQRNode& child = nodes_.at(it->second);
    if (child.kind == NodeKind::Q) return pertinent_graph(it->second);
    PlaneGraph g = pertinent_graph(it->second);
    g.remove_edge(child.parent_edge);
    return g;
}

PlaneGraph SPQRTree::embed_skeleton(int id, bool flip, const std::vector<EdgeId>& p_order) const {
    const SPQRNode& n = nodes_.at(id);
    PlaneGraph g = n.skeleton;
    if (!p_order.empty()) {
        if (n.kind != NodeKind::P)
            throw GraphError(Err::Internal, "p_order only applies to P nodes");
        std::set<EdgeId> want, got;
        for (EdgeId e : g.edge_ids())
            if (e != n.parent_edge) want.insert(e);
        got = std::set<EdgeId>(p_order.begin(), p_order.end());
        if (want != got) throw GraphError(Err::Internal, "p_order must list all non-parent edges");
        std::vector<EdgeId> at_u{n.parent_edge};
        for (EdgeId e : p_order) at_u.push_back(e);
        std::vector<EdgeId> at_v{n.parent_edge};
        for (auto it = p_order.rbegin(); it != p_order.rend(); ++it) at_v.push_back(*it);
        g.set_rotation(n.pole_u, at_u);
        g.set_rotation(n.pole_v, at_v);
        g.validate();
    }
    if (flip) g.flip();
    return g;
}

PlaneGraph SPQRTree::reassemble() const {
    std::function<PlaneGraph(int)> expand = [&](int id) -> PlaneGraph {
        const SPQRNode& n = nodes_.at(id);
        if (n.kind == NodeKind::Q && id != root_) return pertinent_graph(id);
        PlaneGraph g = n.skeleton;
        for (const auto& [e, child] : n.children) {
            const SPQRNode& cn = nodes_.at(child);
            if (cn.kind == NodeKind::Q) continue;  // skeleton edge is the host edge
            PlaneGraph cg = expand(child);
            splice_expansion(g, e, cg);
        }
        return g;
    };
    int top = nodes_.at(root_).children.at(nodes_.at(root_).host_edge);
    return expand(top);
}

std::string SPQRTree::dump() const {
    std::ostringstream out;
    std::function<void(int, int)> rec = [&](int id, int depth) {
        const SPQRNode& n = nodes_.at(id);
        out << std::string(static_cast<size_t>(depth) * 2, ' ');
        out << node_kind_name(n.kind) << id << " poles=(" << n.pole_u << "," << n.pole_v << ")";
        if (n.kind == NodeKind::Q) out << " edge=" << n.host_edge;
        else {
            out << " skeleton=[";
            bool first = true;
            for (EdgeId e : n.skeleton.edge_ids()) {
                auto [a, b] = n.skeleton.endpoints(e);
                if (!first) out << " ";
                first = false;
                out << e << ":(" << a << "," << b << ")";
                if (e == n.parent_edge) out << "*";
            }
            out << "]";
        }
        out << "\n";
        for (int c : children_of(id)) rec(c, depth + 1);
    };
    rec(root_, 0);
    return out.str();
}

std::string SPQRTree::dump_dot() const {
    std::ostringstream out;
    out << "digraph spqr {\n";
    for (const auto& [id, n] : nodes_) {
        out << "  n" << id << " [label=\"" << node_kind_name(n.kind) << id;
        if (n.kind == NodeKind::Q) out << " e" << n.host_edge;
        out << "\"];\n";
    }
    for (const auto& [id, n] : nodes_)
        for (int c : children_of(id)) out << "  n" << id << " -> n" << c << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<int> SPQRTree::children_of(int id) const {
    const SPQRNode& n = nodes_.at(id);
    std::vector<std::pair<EdgeId, int>> kids;
    for (const auto& [e, c] : n.children) {
        EdgeId key = *nodes_.at(c).pert_edges.begin();
        kids.push_back({key, c});
    }
    std::sort(kids.begin(), kids.end());
    std::vector<int> out;
    for (auto [k, c] : kids) out.push_back(c);
    return out;
}

}  // namespace planarforge
