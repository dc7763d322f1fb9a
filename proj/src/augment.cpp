#include "planarforge/augment.hpp"

#include <algorithm>
#include <cstdlib>

#include "planarforge/canonical.hpp"
#include "planarforge/connectivity.hpp"

namespace planarforge {

namespace {

bool edge_on_face(const PlaneGraph& g, int face, EdgeId e) {
    return g.faces()[face].contains_edge(e);
}

/// Free-edge lists of one placed expansion, used for anchors.
struct EdgeState {
    enum Kind { BareReal, BareVirtual, Expanded } kind = BareVirtual;
    std::vector<EdgeId> outward;  // fresh candidates facing the outer region
};

}  // namespace

AugmentEngine::AugmentEngine(const PlaneGraph& host) : host_(host) {
    next_v_ = host.fresh_vertex_id();
    next_e_ = host.fresh_edge_id();
}

void AugmentEngine::sync_before(PlaneGraph& g) { g.reserve_ids(next_v_, next_e_); }

void AugmentEngine::sync_after(const PlaneGraph& g) {
    next_v_ = std::max(next_v_, g.fresh_vertex_id());
    next_e_ = std::max(next_e_, g.fresh_edge_id());
}

HSplitRecord AugmentEngine::split(PlaneGraph& g, EdgeId a, EdgeId b) {
    if (!fresh(a) || !fresh(b)) throw GraphError(Err::Internal, "split on a consumed edge");
    if (!host_.has_edge(a) || !host_.has_edge(b))
        throw GraphError(Err::Internal, "split pair must be host edges");
    sync_before(g);
    std::pair<PlaneGraph, HSplitRecord> sp = [&] {
        try {
            return h_split(g, a, b);
        } catch (const GraphError& err) {
            throw GraphError(err.code(), std::string(err.what()) + " [pair " + std::to_string(a) +
                                             "," + std::to_string(b) + "]");
        }
    }();
    auto& [out, rec] = sp;
    g = std::move(out);
    sync_after(g);
    consumed_.insert(a);
    consumed_.insert(b);
    half_of_[rec.halves1.first] = a;
    half_of_[rec.halves1.second] = a;
    half_of_[rec.halves2.first] = b;
    half_of_[rec.halves2.second] = b;
    pairs_.push_back({a, b});
    records_.push_back(rec);
    return rec;
}

void AugmentEngine::normalize(ExtendibleTriple& t) const {
    auto l_side_ok = [&]() {
        int fa = t.pert.face_of(t.pert.dart(t.parent_edge, t.pole_u));
        for (EdgeId e : t.L)
            if (!edge_on_face(t.pert, fa, e)) return false;
        return true;
    };
    if (l_side_ok()) return;
    t.pert.flip();
    if (!l_side_ok()) throw GraphError(Err::Internal, "triple cannot be normalized");
}

ExtendibleTriple AugmentEngine::process_q(EdgeId host_edge) {
    ExtendibleTriple t;
    auto [u, v] = host_.endpoints(host_edge);
    t.pert.add_vertex_with_id(u);
    t.pert.add_vertex_with_id(v);
    t.pert.add_edge_with_id(host_edge, u, v);
    t.parent_edge = host_edge;
    t.pole_u = std::min(u, v);
    t.pole_v = std::max(u, v);
    t.L = {host_edge};
    t.R = {host_edge};
    t.is_q = true;
    return t;
}

namespace {

/// One child slot of a composition, with path orientation resolved.
struct Slot {
    EdgeId skel_edge = -1;
    bool q = false;
    EdgeId q_edge = -1;  // the host edge for Q children
    ExtendibleTriple triple;
    bool near_u_first = true;  // path runs pole_u -> pole_v of the child

    EdgeId first_along() const {
        if (q) return q_edge;
        return near_u_first ? triple.L[0] : triple.L[1];
    }
    EdgeId last_along() const {
        if (q) return q_edge;
        return near_u_first ? triple.L[1] : triple.L[0];
    }
};

}  // namespace

/// Splices the child triple into g at its skeleton edge so that the child's
/// L side merges with `target_face` (a face index of g valid right now).
static void splice_triple(PlaneGraph& g, EdgeId skel_edge, ExtendibleTriple child,
                          int target_face) {
    // the slot's (v -> u) dart side of g merges with the child's (u -> v)
    // side, which is where a normalized child keeps its L edges
    Dart duv = g.dart(skel_edge, child.pole_u);
    Dart dvu = g.dart(skel_edge, child.pole_v);
    if (g.face_of(dvu) == target_face) {
        // keep the child as is
    } else if (g.face_of(duv) == target_face) {
        child.pert.flip();
    } else {
        throw GraphError(Err::Internal, "splice target face not incident to the slot");
    }
    splice_expansion(g, skel_edge, child.pert);
}

ExtendibleTriple AugmentEngine::process_node(const SPQRTree& t, int node) {
    const SPQRNode& n = t.node(node);
    switch (n.kind) {
        case NodeKind::Q: return process_q(n.host_edge);
        case NodeKind::S: return process_s(t, node);
        case NodeKind::P: return process_p(t, node);
        case NodeKind::R: return process_r(t, node);
    }
    throw GraphError(Err::Internal, "unknown node kind");
}

ExtendibleTriple AugmentEngine::process_s(const SPQRTree& t, int node) {
    const SPQRNode& n = t.node(node);
    if (n.kind != NodeKind::S) throw GraphError(Err::Internal, "process_s on a non-S node");
    const PlaneGraph& sk = n.skeleton;
    for (EdgeId e : sk.edge_ids()) next_e_ = std::max(next_e_, e + 1);

    // path edges from pole_u to pole_v, skipping the parent edge
    std::vector<EdgeId> path;
    {
        VertexId cur = n.pole_u;
        EdgeId prev = n.parent_edge;
        while (cur != n.pole_v) {
            const auto& rot = sk.rotation(cur);
            EdgeId nxt = rot[0] == prev ? rot[1] : rot[0];
            path.push_back(nxt);
            cur = sk.other_end(nxt, cur);
            prev = nxt;
        }
    }

    // child slots in path order
    std::vector<Slot> slots;
    VertexId walk = n.pole_u;
    for (EdgeId e : path) {
        Slot s;
        s.skel_edge = e;
        int child = n.children.at(e);
        const SPQRNode& cn = t.node(child);
        if (cn.kind == NodeKind::Q) {
            s.q = true;
            s.q_edge = cn.host_edge;
        } else {
            s.triple = process_node(t, child);
            s.near_u_first = (walk == s.triple.pole_u);
        }
        slots.push_back(std::move(s));
        walk = sk.other_end(e, walk);
    }
    for (size_t i = 0; i + 1 < slots.size(); ++i)
        if (slots[i].q && slots[i + 1].q)
            throw GraphError(Err::AdjacentQChildren,
                             "adjacent Q children require a degree-2 host vertex");
    std::vector<int> non_q;
    for (size_t i = 0; i < slots.size(); ++i)
        if (!slots[i].q) non_q.push_back(static_cast<int>(i));
    if (non_q.empty())
        throw GraphError(Err::AdjacentQChildren, "an S node needs a non-Q child when deg >= 3");

    PlaneGraph g = sk;
    sync_before(g);
    Dart side_a{n.parent_edge, n.pole_u};
    for (int i : non_q) {
        int target = g.face_of(side_a);
        splice_triple(g, slots[i].skel_edge, slots[i].triple, target);
        sync_after(g);
    }

    ExtendibleTriple out;
    if (non_q.size() == 1) {
        const Slot& s = slots[non_q[0]];
        out.L = {s.first_along(), s.last_along()};
        out.R = s.triple.R;
    } else {
        for (size_t k = 0; k + 1 < non_q.size(); ++k)
            split(g, slots[non_q[k]].last_along(), slots[non_q[k + 1]].first_along());
        out.L = {slots[non_q.front()].first_along(), slots[non_q.back()].last_along()};
        out.R = slots[non_q.front()].triple.R;
    }
    out.pert = std::move(g);
    out.parent_edge = n.parent_edge;
    out.pole_u = n.pole_u;
    out.pole_v = n.pole_v;
    normalize(out);
    return out;
}

ExtendibleTriple AugmentEngine::process_p(const SPQRTree& t, int node) {
    const SPQRNode& n = t.node(node);
    if (n.kind != NodeKind::P) throw GraphError(Err::Internal, "process_p on a non-P node");
    for (EdgeId e : n.skeleton.edge_ids()) next_e_ = std::max(next_e_, e + 1);

    // order children deterministically; at most one Q child
    std::vector<Slot> vs;
    std::optional<EdgeId> q_edge;
    std::vector<std::pair<EdgeId, EdgeId>> order;  // (sort key, skel edge)
    for (const auto& [e, child] : n.children)
        order.push_back({*t.node(child).pert_edges.begin(), e});
    std::sort(order.begin(), order.end());
    for (auto [key, e] : order) {
        int child = n.children.at(e);
        const SPQRNode& cn = t.node(child);
        if (cn.kind == NodeKind::Q) {
            if (q_edge) throw GraphError(Err::MultipleQChildren, "parallel host edges");
            q_edge = cn.host_edge;
        } else {
            Slot s;
            s.skel_edge = e;
            s.triple = process_node(t, child);
            s.near_u_first = (n.pole_u == s.triple.pole_u);
            vs.push_back(std::move(s));
        }
    }
    if (vs.empty()) throw GraphError(Err::MultipleQChildren, "P node without a non-Q child");

    // fresh bond embedding: parent first, then children, Q on the outer side
    PlaneGraph g;
    g.add_vertex_with_id(n.pole_u);
    g.add_vertex_with_id(n.pole_v);
    std::vector<EdgeId> stack{n.parent_edge};
    for (const Slot& s : vs) stack.push_back(s.skel_edge);
    if (q_edge) stack.push_back(*q_edge);
    for (EdgeId e : stack) g.add_edge_with_id(e, n.pole_u, n.pole_v);
    g.set_rotation(n.pole_u, stack);
    std::vector<EdgeId> rev{n.parent_edge};
    for (auto it = stack.rbegin(); it != std::prev(stack.rend()); ++it) rev.push_back(*it);
    g.set_rotation(n.pole_v, rev);
    g.validate();
    sync_before(g);

    for (const Slot& s : vs) {
        int target = g.face_of(g.dart(s.skel_edge, n.pole_u));
        splice_triple(g, s.skel_edge, s.triple, target);
        sync_after(g);
    }
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        split(g, vs[i].triple.R[0], vs[i + 1].last_along());

    ExtendibleTriple out;
    out.pert = std::move(g);
    out.parent_edge = n.parent_edge;
    out.pole_u = n.pole_u;
    out.pole_v = n.pole_v;
    out.L = {vs.front().first_along(), vs.front().last_along()};
    out.R = q_edge ? std::vector<EdgeId>{*q_edge} : vs.back().triple.R;
    normalize(out);
    return out;
}


ExtendibleTriple AugmentEngine::process_r(const SPQRTree& t, int node) {
    const SPQRNode& n = t.node(node);
    if (n.kind != NodeKind::R) throw GraphError(Err::Internal, "process_r on a non-R node");
    const PlaneGraph& sk = n.skeleton;
    for (EdgeId e : sk.edge_ids()) next_e_ = std::max(next_e_, e + 1);
    VertexId u = n.pole_u, v = n.pole_v;
    EdgeId eps = n.parent_edge;

    // regular embedding: the outer face is the one traversing the parent edge
    // u -> v; then the walk reads ..., v2, u, v, ... which makes (v2, u, v)
    // clockwise as the canonical ordering wants
    Dart od_sk = sk.dart(eps, u);
    const Face& outer_f = sk.faces()[sk.face_of(od_sk)];
    VertexId v2 = -1;
    {
        const auto& w = outer_f.walk;
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i].tail == u) v2 = w[(i + w.size() - 1) % w.size()].tail;
    }
    if (v2 < 0) throw GraphError(Err::Internal, "pole missing from the outer walk");
    CanonicalOrdering pi;
    try {
        pi = canonical_ordering(sk, od_sk, u, v2, v);
    } catch (const GraphError& e) {
        throw GraphError(Err::NoCanonicalOrdering, e.what());
    }
    EdgeId ell = *sk.find_edge(u, v2);
    bool ell_q = (t.node(n.children.at(ell)).kind == NodeKind::Q);

    std::map<EdgeId, EdgeState> estate;
    auto outward_fresh = [&](EdgeId skel_e) -> std::optional<EdgeId> {
        auto it = estate.find(skel_e);
        if (it == estate.end()) return std::nullopt;
        for (EdgeId e : it->second.outward)
            if (fresh(e) && host_.has_edge(e)) return e;
        return std::nullopt;
    };

    PlaneGraph g;
    g.add_vertex_with_id(u);
    g.add_vertex_with_id(v2);
    g.add_edge_with_id(ell, u, v2);
    sync_before(g);
    estate[ell] = ell_q ? EdgeState{EdgeState::BareReal, {ell}} : EdgeState{EdgeState::BareVirtual, {}};

    std::set<VertexId> placed{u, v2};
    Dart od{ell, u};

    for (size_t idx = 1; idx < pi.parts.size(); ++idx) {
        std::vector<VertexId> part = pi.parts[idx];

        // the future boundary keeps a specific outward dart of ell
        std::set<VertexId> next_placed = placed;
        for (VertexId z : part) next_placed.insert(z);
        auto walk_next = induced_outer_walk(sk, next_placed, od_sk);
        if (!walk_next) throw GraphError(Err::Internal, "prefix boundary lost");
        Dart od_next_skel{-1, -1};
        for (const Dart& d : *walk_next)
            if (d.edge == ell) od_next_skel = d;
        if (od_next_skel.edge < 0) throw GraphError(Err::Internal, "(v1,v2) left the boundary");
        // resolve the skeleton dart against the current graph: after a split
        // consumed ell, its tail-side half keeps the same face side
        auto resolve_ell = [&](Dart skel_d) -> Dart {
            if (g.has_edge(ell)) return skel_d;
            for (EdgeId e : g.rotation(skel_d.tail)) {
                auto it = half_of_.find(e);
                if (it != half_of_.end() && it->second == ell) return Dart{e, skel_d.tail};
            }
            throw GraphError(Err::Internal, "lost the outward half of (v1,v2)");
        };
        Dart od_next = resolve_ell(od_next_skel);

        // attachment set
        std::vector<VertexId> attach;
        bool chain = part.size() >= 2;
        auto below_of = [&](VertexId z) {
            std::vector<VertexId> out;
            for (EdgeId e : sk.rotation(z)) {
                VertexId w = sk.other_end(e, z);
                if (placed.count(w)) out.push_back(w);
            }
            return out;
        };
        if (chain) {
            auto bx = below_of(part.front());
            auto by = below_of(part.back());
            if (bx.size() != 1 || by.size() != 1)
                throw GraphError(Err::Internal, "chain endpoints need one neighbour below");
            attach = {bx[0], by[0]};
        } else {
            attach = below_of(part[0]);
        }
        if (attach.size() < 2) throw GraphError(Err::Internal, "need two attachments below");

        // current pert-level outer walk and positions
        std::vector<Dart> W = g.faces()[g.face_of(od)].walk;
        std::map<VertexId, int> wpos;
        std::map<VertexId, Dart> dep;
        int ell_pos = -1;
        for (size_t i = 0; i < W.size(); ++i) {
            if (!dep.count(W[i].tail)) {
                dep[W[i].tail] = W[i];
                wpos[W[i].tail] = static_cast<int>(i);
            }
            if (W[i] == od_next) ell_pos = static_cast<int>(i);
        }
        if (ell_pos < 0) throw GraphError(Err::Internal, "outward ell dart missing from the walk");
        for (VertexId w : attach)
            if (!wpos.count(w)) throw GraphError(Err::Internal, "attachment not on the boundary");

        // kept gap: the attachment gap containing the outward ell dart; the
        // fan reads the attachments along the walk starting after it
        int wn = static_cast<int>(W.size());
        std::vector<int> apos;
        for (VertexId w : attach) apos.push_back(wpos.at(w));
        std::sort(apos.begin(), apos.end());
        int kept = -1;
        for (size_t gi = 0; gi < apos.size(); ++gi) {
            int a = apos[gi];
            int b = apos[(gi + 1) % apos.size()];
            int len = (b - a + wn) % wn;
            if (len == 0) len = wn;
            int off = (ell_pos - a + wn) % wn;
            if (off < len) {
                kept = static_cast<int>(gi);
                break;
            }
        }
        if (kept < 0) throw GraphError(Err::Internal, "no gap holds the outward ell dart");
        std::vector<VertexId> fan;
        for (size_t k = 1; k <= apos.size(); ++k)
            fan.push_back(W[apos[(kept + k) % apos.size()]].tail);
        if (chain) {
            auto bf = below_of(part.front());
            if (bf[0] != fan.front()) std::reverse(part.begin(), part.end());
        }

        // covered subwalk: from fan.front() to fan.back() along the walk
        std::vector<Dart> covered;
        {
            int pa = wpos.at(fan.front());
            int pb = wpos.at(fan.back());
            for (int i = pa; i != pb; i = (i + 1) % wn) covered.push_back(W[i]);
            for (const Dart& d : covered)
                if (d == od_next)
                    throw GraphError(Err::Internal, "covered walk swallowed the ell dart");
        }

        std::vector<EdgeId> new_edges;
        if (chain) {
            std::vector<VertexId> pathv{fan[0]};
            for (VertexId z : part) pathv.push_back(z);
            pathv.push_back(fan[1]);
            for (VertexId z : part) g.add_vertex_with_id(z);
            for (size_t i = 0; i + 1 < pathv.size(); ++i) {
                auto id = sk.find_edge(pathv[i], pathv[i + 1]);
                if (!id) throw GraphError(Err::Internal, "missing skeleton edge along the chain");
                new_edges.push_back(*id);
            }
            g.add_edge_with_id_before(new_edges.front(), fan[0], pathv[1],
                                      dep[fan[0]].edge, -1);
            for (size_t i = 1; i + 1 < new_edges.size(); ++i)
                g.add_edge_with_id(new_edges[i], pathv[i], pathv[i + 1]);
            g.add_edge_with_id_before(new_edges.back(), pathv[pathv.size() - 2], fan[1], -1,
                                      dep[fan[1]].edge);
            for (size_t i = 0; i < part.size(); ++i)
                g.set_rotation(part[i], {new_edges[i], new_edges[i + 1]});
            g.validate();
        } else {
            VertexId z = part[0];
            g.add_vertex_with_id(z);
            for (VertexId nj : fan) {
                auto id = sk.find_edge(z, nj);
                if (!id) throw GraphError(Err::Internal, "missing fan edge");
                new_edges.push_back(*id);
                g.add_edge_with_id_before(*id, nj, z, dep[nj].edge, -1);
            }
            g.set_rotation(z, new_edges);
            try {
                g.validate();
            } catch (const GraphError&) {
                std::vector<EdgeId> revz(new_edges.rbegin(), new_edges.rend());
                g.set_rotation(z, revz);
                g.validate();
            }
        }

        // pockets, named by stable darts on old boundary edges
        std::vector<Dart> pocket_dart;
        if (chain) {
            pocket_dart.push_back(covered.front());
        } else {
            size_t ci = 0;
            for (size_t j = 0; j + 1 < fan.size(); ++j) {
                while (ci < covered.size() && covered[ci].tail != fan[j]) ++ci;
                if (ci == covered.size())
                    throw GraphError(Err::Internal, "fan vertex missing from the covered walk");
                pocket_dart.push_back(covered[ci]);
            }
        }

        // substitute the expansions of the new skeleton edges
        std::vector<Slot> slots(new_edges.size());
        for (size_t j = 0; j < new_edges.size(); ++j) {
            EdgeId e = new_edges[j];
            Slot& s = slots[j];
            s.skel_edge = e;
            if (e == eps) {
                s.q = true;  // the parent edge stays bare and is never free
                s.q_edge = -1;
                estate[e] = {EdgeState::BareVirtual, {}};
                continue;
            }
            const SPQRNode& cn = t.node(n.children.at(e));
            if (cn.kind == NodeKind::Q) {
                s.q = true;
                s.q_edge = cn.host_edge;
                estate[e] = {EdgeState::BareReal, {e}};
                continue;
            }
            s.triple = process_node(t, cn.id);
            size_t pocket_ix = chain ? 0 : (j == 0 ? 0 : j - 1);
            int target = g.face_of(pocket_dart[pocket_ix]);
            if (chain) {
                VertexId near = (j == 0) ? fan.front() : part[j - 1];
                s.near_u_first = (near == s.triple.pole_u);
            } else {
                s.near_u_first = true;
            }
            splice_triple(g, e, s.triple, target);
            sync_after(g);
            estate[e] = {EdgeState::Expanded, {s.triple.R[0]}};
        }

        // pocket chains of H-splits
        auto first_fresh = [&](const std::vector<EdgeId>& list) -> std::optional<EdgeId> {
            for (EdgeId e : list)
                if (fresh(e)) return e;
            return std::nullopt;
        };
        auto last_fresh = [&](const std::vector<EdgeId>& list) -> std::optional<EdgeId> {
            for (auto it = list.rbegin(); it != list.rend(); ++it)
                if (fresh(*it)) return *it;
            return std::nullopt;
        };
        size_t pockets = pocket_dart.size();
        for (size_t pj = 0; pj < pockets; ++pj) {
            std::vector<std::vector<EdgeId>> participants;
            // anchor from the covered gap below this pocket
            {
                std::optional<EdgeId> anchor;
                if (chain) {
                    auto id = sk.find_edge(fan[0], fan[1]);
                    if (id) anchor = outward_fresh(*id);
                } else {
                    // covered boundary edges strictly between fan[pj] and
                    // fan[pj+1]: scan the covered subwalk section
                    bool inside = false;
                    for (const Dart& d : covered) {
                        if (d.tail == fan[pj]) inside = true;
                        if (d.tail == fan[pj + 1]) break;
                        if (!inside) continue;
                        if (!estate.count(d.edge)) continue;
                        if (auto aa = outward_fresh(d.edge)) {
                            anchor = aa;
                            break;
                        }
                    }
                }
                if (anchor) participants.push_back({*anchor});
            }
            if (chain) {
                for (const Slot& s : slots)
                    if (!s.q) participants.push_back({s.first_along(), s.last_along()});
            } else {
                if (pj == 0 && !slots[0].q)
                    participants.push_back({slots[0].triple.L[0], slots[0].triple.L[1]});
                if (!slots[pj + 1].q)
                    participants.push_back({slots[pj + 1].triple.L[0], slots[pj + 1].triple.L[1]});
            }
            for (size_t k = 0; k + 1 < participants.size(); ++k) {
                auto a = last_fresh(participants[k]);
                auto b = first_fresh(participants[k + 1]);
                if (!a || !b) throw GraphError(Err::Internal, "pocket participant exhausted");
                split(g, *a, *b);
            }
        }

        od = resolve_ell(od_next_skel);

        for (VertexId z : part) placed.insert(z);
    }

    // fix-up: expand a non-Q child of the starting edge and tie it in
    if (!ell_q) {
        ExtendibleTriple te = process_node(t, n.children.at(ell));
        int target = g.face_of(od);
        EdgeId near_v2 = (te.pole_u == v2) ? te.L[0] : te.L[1];
        // tau: the other boundary edge at v2 on the skeleton's outer face
        VertexId znb = -1;
        {
            const auto& w = outer_f.walk;
            for (size_t i = 0; i < w.size(); ++i)
                if (w[i].tail == v2) {
                    VertexId before = w[(i + w.size() - 1) % w.size()].tail;
                    VertexId after = sk.other_end(w[i].edge, v2);
                    znb = (before == u) ? after : before;
                }
        }
        auto e_tau = sk.find_edge(v2, znb);
        if (!e_tau) throw GraphError(Err::Internal, "tau edge missing");
        auto b = outward_fresh(*e_tau);
        if (!b) throw GraphError(Err::Internal, "tau has no free edge for the fix-up split");
        EdgeId a = fresh(near_v2) ? near_v2 : (near_v2 == te.L[0] ? te.L[1] : te.L[0]);
        // keep an outer dart that survives both the splice of ell and the
        // subdivision of the split pair
        Dart outer_keep{-1, -1};
        for (const Dart& d : g.faces()[target].walk)
            if (d.edge != ell && d.edge != a && d.edge != *b) {
                outer_keep = d;
                break;
            }
        if (outer_keep.edge < 0) throw GraphError(Err::Internal, "degenerate outer face");
        splice_triple(g, ell, te, target);
        sync_after(g);
        od = outer_keep;
        split(g, a, *b);
    }

    // instantiate L and R from the two parent-incident faces
    int fa = g.face_of(g.dart(eps, u));
    int fb = g.face_of(g.dart(eps, v));
    int fout = g.face_of(od);
    if (fout != fa && fout != fb) throw GraphError(Err::Internal, "parent edge left the boundary");
    int finn = (fout == fa) ? fb : fa;

    std::vector<EdgeId> Lpick;
    {
        const Face& f = g.faces()[fout];
        // boundary path from u to v: rotate the walk to start at the eps dart
        size_t at = 0;
        for (size_t i = 0; i < f.walk.size(); ++i)
            if (f.walk[i].edge == eps) at = i;
        std::vector<EdgeId> along;
        for (size_t k = 1; k < f.walk.size(); ++k) {
            EdgeId e = f.walk[(at + k) % f.walk.size()].edge;
            if (e != eps && host_.has_edge(e) && fresh(e)) along.push_back(e);
        }
        if (f.walk[at].tail == u) std::reverse(along.begin(), along.end());
        for (EdgeId e : along) {
            if (Lpick.size() == 2) break;
            if (Lpick.empty() || Lpick[0] != e) Lpick.push_back(e);
        }
    }
    if (Lpick.size() != 2)
        throw GraphError(Err::Internal, "fewer than two free edges on the outer face");
    std::optional<EdgeId> Rpick;
    for (const Dart& d : g.faces()[finn].walk)
        if (d.edge != eps && host_.has_edge(d.edge) && fresh(d.edge)) {
            Rpick = d.edge;
            break;
        }
    if (!Rpick) throw GraphError(Err::Internal, "no free edge on the inner parent face");

    ExtendibleTriple out;
    out.pert = std::move(g);
    out.parent_edge = eps;
    out.pole_u = u;
    out.pole_v = v;
    out.L = Lpick;
    out.R = {*Rpick};
    normalize(out);
    return out;
}

AugmentationResult augment_to_3connected(const PlaneGraph& g) {
    AugmentEngine engine(g);
    return engine.run();
}

AugmentationResult AugmentEngine::run() {
    if (!is_simple(host_)) throw GraphError(Err::NotBiconnected, "host must be simple");
    if (!is_biconnected(host_)) throw GraphError(Err::NotBiconnected, "host must be 2-connected");
    DegreeProfile prof = degree_profile(host_);
    if (prof.min_degree < 3)
        throw GraphError(Err::MinDegreeTooLow, "Lemma 1 requires min degree >= 3");

    // root: lowest host edge whose triconnected component is rigid
    SPQRTree probe = SPQRTree::build(host_, host_.edge_ids().front());
    std::map<EdgeId, NodeKind> comp_kind;
    for (int id : probe.node_ids()) {
        const SPQRNode& n = probe.node(id);
        if (n.kind == NodeKind::Q) continue;
        for (EdgeId e : n.real_edges) comp_kind[e] = n.kind;
    }
    EdgeId root_edge = -1;
    for (EdgeId e : host_.edge_ids())
        if (comp_kind.count(e) && comp_kind.at(e) == NodeKind::R) {
            root_edge = e;
            break;
        }
    if (root_edge < 0)
        throw GraphError(Err::NoRNodeAdjacentRoot,
                         "no rigid component carries a host edge; cannot root per Lemma 1");

    SPQRTree tree = SPQRTree::build(host_, root_edge);
    int top = tree.node(tree.root()).children.begin()->second;
    ExtendibleTriple xi = process_node(tree, top);

    // final split <root edge, e in L_xi>
    EdgeId e = fresh(xi.L[0]) ? xi.L[0] : xi.L[1];
    PlaneGraph out = xi.pert;
    split(out, root_edge, e);

    AugmentationResult res;
    res.embedded_host = out;
    for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
        PlaneGraph& h = res.embedded_host;
        h.remove_edge(it->cross_edge);
        auto merge = [&](VertexId m, std::pair<EdgeId, EdgeId> halves, EdgeId orig) {
            auto [h1, h2] = halves;
            VertexId p = h.other_end(h1, m);
            VertexId q = h.other_end(h2, m);
            auto hosts = host_.endpoints(orig);
            h.add_edge_with_id(orig, hosts.first, hosts.second);
            auto strip = [&](VertexId w) {
                auto order = h.rotation(w);
                auto pos = std::find(order.rbegin(), order.rend(), orig);
                order.erase(std::next(pos).base());
                h.set_rotation(w, order);
            };
            strip(p);
            strip(q);
            h.replace_in_rotation(p, h1, orig);
            h.replace_in_rotation(q, h2, orig);
            h.set_rotation(m, {});
            h.remove_edge(h1);
            h.remove_edge(h2);
            h.remove_vertex(m);
        };
        merge(it->new_v1, it->halves1, it->e1);
        merge(it->new_v2, it->halves2, it->e2);
    }
    res.embedded_host.validate();
    res.graph = std::move(out);
    res.pairs = pairs_;
    res.records = records_;
    return res;
}

PlaneGraph augment_with_gadget(
    const PlaneGraph& g,
    const std::function<PlaneGraph(const PlaneGraph&, EdgeId, EdgeId)>& augmentor) {
    AugmentationResult base = augment_to_3connected(g);
    PlaneGraph out = base.embedded_host;
    for (auto [a, b] : base.pairs) out = augmentor(out, a, b);
    if (!is_triconnected(out))
        throw GraphError(Err::GadgetContractViolated, "gadget output is not 3-connected");
    return out;
}

bool check_externally_3connectible(const ExtendibleTriple& t, EdgeId e) {
    if (t.is_q) return true;
    if (e == t.parent_edge)
        throw GraphError(Err::EdgeNotOnOuterFace, "e must differ from the parent edge");
    if (!t.pert.has_edge(e)) throw GraphError(Err::Internal, "unknown edge");
    int fa = t.pert.face_of(t.pert.dart(t.parent_edge, t.pole_u));
    int fb = t.pert.face_of(t.pert.dart(t.parent_edge, t.pole_v));
    if (!edge_on_face(t.pert, fa, e) && !edge_on_face(t.pert, fb, e))
        throw GraphError(Err::EdgeNotOnOuterFace,
                         "e must border a face incident to the parent edge");
    auto [g, rec] = h_split(t.pert, e, t.parent_edge);
    auto suppressed = suppress_degree2(g, {t.pole_u, t.pole_v});
    if (!suppressed) return false;
    auto core = suppress_degree2(*suppressed, {});
    if (!core) return false;
    if (core->num_vertices() == 2) {
        // a bond: subdivision of the 3-connected k-bond when k >= 3
        return core->num_edges() >= 3;
    }
    if (core->num_vertices() < 4) return false;
    if (!is_simple(*core)) return false;
    return is_triconnected(*core);
}

TripleReport validate_triple(const ExtendibleTriple& t, const std::set<EdgeId>& used) {
    TripleReport rep;
    auto bad = [&](const std::string& m) { rep.violations.push_back(m); };
    try {
        t.pert.validate();
    } catch (const GraphError& e) {
        bad(std::string("pert invalid: ") + e.what());
        return rep;
    }
    if (!t.pert.has_edge(t.parent_edge)) {
        bad("parent edge missing");
        return rep;
    }
    auto [a, b] = t.pert.endpoints(t.parent_edge);
    if (std::minmax(a, b) != std::minmax(t.pole_u, t.pole_v)) bad("pole mismatch");
    if (t.is_q) {
        if (!(t.L.size() == 1 && t.R.size() == 1 && t.L[0] == t.R[0] && t.L[0] == t.parent_edge))
            bad("Q triple must have L = R = [edge]");
        rep.valid = rep.violations.empty();
        return rep;
    }
    if (t.L.size() != 2 || t.L[0] == t.L[1]) bad("L must hold two distinct edges");
    if (t.R.size() != 1) bad("R must hold one edge");
    for (EdgeId e : t.L)
        if (e == t.parent_edge) bad("L contains the parent edge");
    for (EdgeId e : t.R)
        if (e == t.parent_edge) bad("R contains the parent edge");
    for (EdgeId e : t.L) {
        if (!t.pert.has_edge(e)) bad("L edge missing from pert*");
        if (used.count(e)) bad("L edge is not free");
    }
    for (EdgeId e : t.R) {
        if (!t.pert.has_edge(e)) bad("R edge missing from pert*");
        if (used.count(e)) bad("R edge is not free");
    }
    if (!rep.violations.empty()) return rep;

    int fa = t.pert.face_of(t.pert.dart(t.parent_edge, t.pole_u));
    int fb = t.pert.face_of(t.pert.dart(t.parent_edge, t.pole_v));
    if (fa == fb) bad("parent edge borders a single face");
    for (EdgeId e : t.L)
        if (!edge_on_face(t.pert, fa, e)) bad("an L edge misses the L-side face");
    if (!edge_on_face(t.pert, fb, t.R[0])) bad("the R edge misses the R-side face");
    try {
        if (!check_externally_3connectible(t, t.L[0]))
            bad("pert* is not externally 3-connectible at L[0]");
    } catch (const GraphError& e) {
        bad(std::string("external check failed: ") + e.what());
    }
    rep.valid = rep.violations.empty();
    return rep;
}

}  // namespace planarforge
