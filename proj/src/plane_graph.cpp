#include "planarforge/plane_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace planarforge {

const char* err_name(Err e) {
    switch (e) {
        case Err::InconsistentRotation: return "InconsistentRotation";
        case Err::NotPlanarEmbedding: return "NotPlanarEmbedding";
        case Err::NoSharedFace: return "NoSharedFace";
        case Err::SameEdge: return "SameEdge";
        case Err::Disconnected: return "Disconnected";
        case Err::TooSmall: return "TooSmall";
        case Err::NotBiconnected: return "NotBiconnected";
        case Err::NotTriconnected: return "NotTriconnected";
        case Err::AnchorsNotOnOuterFace: return "AnchorsNotOnOuterFace";
        case Err::AnchorsNotClockwise: return "AnchorsNotClockwise";
        case Err::IsParentEdge: return "IsParentEdge";
        case Err::AttachmentOrderIncompatible: return "AttachmentOrderIncompatible";
        case Err::EdgeNotOnOuterFace: return "EdgeNotOnOuterFace";
        case Err::AdjacentQChildren: return "AdjacentQChildren";
        case Err::MultipleQChildren: return "MultipleQChildren";
        case Err::NoCanonicalOrdering: return "NoCanonicalOrdering";
        case Err::MinDegreeTooLow: return "MinDegreeTooLow";
        case Err::NoRNodeAdjacentRoot: return "NoRNodeAdjacentRoot";
        case Err::NotCubic: return "NotCubic";
        case Err::NotFourRegular: return "NotFourRegular";
        case Err::NotMaxDegree3: return "NotMaxDegree3";
        case Err::FaceTooSmall: return "FaceTooSmall";
        case Err::NotCutVertex: return "NotCutVertex";
        case Err::ChainTooShort: return "ChainTooShort";
        case Err::GadgetContractViolated: return "GadgetContractViolated";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::GenerationFailed: return "GenerationFailed";
        case Err::ParseError: return "ParseError";
        case Err::ClaimFailed: return "ClaimFailed";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

PlaneGraph PlaneGraph::build(const std::vector<VertexId>& vertices,
                             const std::map<EdgeId, std::pair<VertexId, VertexId>>& edges,
                             const std::map<VertexId, std::vector<EdgeId>>& rotation) {
    PlaneGraph g;
    for (VertexId v : vertices) {
        if (v < 0) throw GraphError(Err::InconsistentRotation, "negative vertex id");
        if (g.rot_.count(v)) throw GraphError(Err::InconsistentRotation, "duplicate vertex id");
        g.rot_[v] = {};
        g.next_v_ = std::max(g.next_v_, v + 1);
    }
    for (const auto& [e, uv] : edges) {
        if (e < 0) throw GraphError(Err::InconsistentRotation, "negative edge id");
        if (!g.rot_.count(uv.first) || !g.rot_.count(uv.second))
            throw GraphError(Err::InconsistentRotation, "edge endpoint not a vertex");
        if (uv.first == uv.second)
            throw GraphError(Err::InconsistentRotation, "loops are not supported");
        g.edges_[e] = uv;
        g.next_e_ = std::max(g.next_e_, e + 1);
    }
    for (const auto& [v, order] : rotation) {
        if (!g.rot_.count(v))
            throw GraphError(Err::InconsistentRotation, "rotation for unknown vertex");
        g.rot_[v] = order;
    }
    g.validate();
    return g;
}

std::vector<VertexId> PlaneGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(rot_.size());
    for (const auto& [v, _] : rot_) out.push_back(v);
    return out;
}

std::vector<EdgeId> PlaneGraph::edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(edges_.size());
    for (const auto& [e, _] : edges_) out.push_back(e);
    return out;
}

const std::pair<VertexId, VertexId>& PlaneGraph::endpoints(EdgeId e) const {
    check_edge(e);
    return edges_.at(e);
}

const std::vector<EdgeId>& PlaneGraph::rotation(VertexId v) const {
    check_vertex(v);
    return rot_.at(v);
}

VertexId PlaneGraph::other_end(EdgeId e, VertexId v) const {
    const auto& [a, b] = endpoints(e);
    if (v == a) return b;
    if (v == b) return a;
    throw GraphError(Err::Internal, "other_end: vertex not an endpoint");
}

Dart PlaneGraph::dart(EdgeId e, VertexId tail) const {
    const auto& [a, b] = endpoints(e);
    if (tail != a && tail != b) throw GraphError(Err::Internal, "dart: bad tail");
    return Dart{e, tail};
}

std::optional<EdgeId> PlaneGraph::find_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    for (EdgeId e : rot_.at(u))
        if (other_end(e, u) == v) return e;
    return std::nullopt;
}

Dart PlaneGraph::next_dart(Dart d) const {
    VertexId h = head(d);
    const auto& order = rotation(h);
    for (size_t i = 0; i < order.size(); ++i) {
        if (order[i] == d.edge) {
            EdgeId e2 = order[(i + 1) % order.size()];
            return Dart{e2, h};
        }
    }
    throw GraphError(Err::InconsistentRotation, "edge missing from head rotation");
}

const std::vector<Face>& PlaneGraph::faces() const {
    if (!faces_dirty_) return faces_;
    faces_.clear();
    face_index_.clear();
    std::set<Dart> seen;
    for (const auto& [e, uv] : edges_) {
        for (VertexId t : {uv.first, uv.second}) {
            Dart start{e, t};
            if (seen.count(start)) continue;
            Face f;
            Dart d = start;
            do {
                f.walk.push_back(d);
                seen.insert(d);
                d = next_dart(d);
            } while (d != start);
            int idx = static_cast<int>(faces_.size());
            for (const Dart& fd : f.walk) face_index_[fd] = idx;
            faces_.push_back(std::move(f));
        }
    }
    faces_dirty_ = false;
    return faces_;
}

int PlaneGraph::face_of(Dart d) const {
    faces();
    auto it = face_index_.find(d);
    if (it == face_index_.end()) {
        if (std::getenv("PF_ABORT_FACEOF")) std::abort();
        throw GraphError(Err::Internal, "face_of: unknown dart");
    }
    return it->second;
}

void PlaneGraph::set_outer(std::optional<Dart> d) {
    if (d) {
        check_edge(d->edge);
        (void)dart(d->edge, d->tail);
    }
    outer_ = d;
}

std::optional<int> PlaneGraph::outer_face_index() const {
    if (!outer_) return std::nullopt;
    return face_of(*outer_);
}

bool PlaneGraph::is_connected() const {
    if (rot_.empty()) return true;
    std::set<VertexId> seen;
    std::queue<VertexId> q;
    q.push(rot_.begin()->first);
    seen.insert(rot_.begin()->first);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (EdgeId e : rot_.at(v)) {
            VertexId w = other_end(e, v);
            if (seen.insert(w).second) q.push(w);
        }
    }
    return seen.size() == rot_.size();
}

bool PlaneGraph::euler_ok() const {
    // per component: V - E + F == 2, where F counts that component's faces
    std::map<VertexId, int> comp;
    int ncomp = 0;
    for (const auto& [v0, _] : rot_) {
        if (comp.count(v0)) continue;
        int c = ncomp++;
        std::queue<VertexId> q;
        q.push(v0);
        comp[v0] = c;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (EdgeId e : rot_.at(v)) {
                VertexId w = other_end(e, v);
                if (!comp.count(w)) {
                    comp[w] = c;
                    q.push(w);
                }
            }
        }
    }
    std::vector<int> nv(ncomp, 0), ne(ncomp, 0), nf(ncomp, 0);
    for (const auto& [v, c] : comp) nv[c]++;
    for (const auto& [e, uv] : edges_) ne[comp.at(uv.first)]++;
    for (const Face& f : faces()) nf[comp.at(f.walk.front().tail)]++;
    for (int c = 0; c < ncomp; ++c) {
        if (ne[c] == 0) continue;  // isolated vertex: fine
        if (nv[c] - ne[c] + nf[c] != 2) return false;
    }
    return true;
}

void PlaneGraph::validate() const {
    // every incidence appears exactly once in the right rotation
    std::map<std::pair<VertexId, EdgeId>, int> want;
    for (const auto& [e, uv] : edges_) {
        if (uv.first == uv.second) throw GraphError(Err::InconsistentRotation, "loop edge");
        want[{uv.first, e}]++;
        want[{uv.second, e}]++;
    }
    std::map<std::pair<VertexId, EdgeId>, int> got;
    for (const auto& [v, order] : rot_)
        for (EdgeId e : order) {
            if (!edges_.count(e))
                throw GraphError(Err::InconsistentRotation, "rotation mentions unknown edge");
            got[{v, e}]++;
        }
    if (want != got)
        throw GraphError(Err::InconsistentRotation,
                         "rotations do not list each incidence exactly once");
    if (!euler_ok()) throw GraphError(Err::NotPlanarEmbedding, "Euler check failed");
    if (outer_) {
        check_edge(outer_->edge);
        (void)face_of(*outer_);
    }
}

bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.rot_ != b.rot_ || a.edges_ != b.edges_) return false;
    if (a.outer_.has_value() != b.outer_.has_value()) return false;
    if (a.outer_ && !(*a.outer_ == *b.outer_)) return false;
    return true;
}

VertexId PlaneGraph::add_vertex() {
    VertexId v = next_v_++;
    rot_[v] = {};
    touch();
    return v;
}

void PlaneGraph::add_vertex_with_id(VertexId v) {
    if (v < 0 || rot_.count(v)) throw GraphError(Err::Internal, "add_vertex_with_id: bad id");
    rot_[v] = {};
    next_v_ = std::max(next_v_, v + 1);
    touch();
}

EdgeId PlaneGraph::add_edge(VertexId u, VertexId v) {
    EdgeId e = next_e_;
    add_edge_with_id(e, u, v);
    return e;
}

void PlaneGraph::add_edge_with_id(EdgeId e, VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError(Err::InconsistentRotation, "loop edge");
    if (e < 0 || edges_.count(e)) throw GraphError(Err::Internal, "add_edge_with_id: bad id");
    edges_[e] = {u, v};
    rot_[u].push_back(e);
    rot_[v].push_back(e);
    next_e_ = std::max(next_e_, e + 1);
    touch();
}

static void insert_before(std::vector<EdgeId>& order, EdgeId e, EdgeId anchor) {
    if (anchor < 0) {
        order.push_back(e);
        return;
    }
    auto it = std::find(order.begin(), order.end(), anchor);
    if (it == order.end()) throw GraphError(Err::Internal, "insert_before: anchor missing");
    order.insert(it, e);
}

EdgeId PlaneGraph::add_edge_before(VertexId u, VertexId v, EdgeId before_u, EdgeId before_v) {
    EdgeId e = next_e_;
    add_edge_with_id_before(e, u, v, before_u, before_v);
    return e;
}

void PlaneGraph::add_edge_with_id_before(EdgeId e, VertexId u, VertexId v, EdgeId before_u,
                                         EdgeId before_v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError(Err::InconsistentRotation, "loop edge");
    if (e < 0 || edges_.count(e)) throw GraphError(Err::Internal, "add_edge_with_id_before: bad id");
    edges_[e] = {u, v};
    insert_before(rot_[u], e, before_u);
    insert_before(rot_[v], e, before_v);
    next_e_ = std::max(next_e_, e + 1);
    touch();
}

void PlaneGraph::remove_edge(EdgeId e) {
    check_edge(e);
    auto [u, v] = edges_.at(e);
    auto drop = [&](VertexId w) {
        auto& order = rot_[w];
        auto it = std::find(order.begin(), order.end(), e);
        if (it != order.end()) order.erase(it);
    };
    drop(u);
    drop(v);
    edges_.erase(e);
    if (outer_ && outer_->edge == e) outer_.reset();
    touch();
}

void PlaneGraph::remove_vertex(VertexId v) {
    check_vertex(v);
    if (!rot_.at(v).empty()) throw GraphError(Err::Internal, "remove_vertex: not isolated");
    rot_.erase(v);
    touch();
}

void PlaneGraph::set_rotation(VertexId v, const std::vector<EdgeId>& order) {
    check_vertex(v);
    rot_[v] = order;
    touch();
}

void PlaneGraph::replace_in_rotation(VertexId v, EdgeId old_e, EdgeId new_e) {
    check_vertex(v);
    auto& order = rot_[v];
    auto it = std::find(order.begin(), order.end(), old_e);
    if (it == order.end()) throw GraphError(Err::Internal, "replace_in_rotation: missing edge");
    *it = new_e;
    touch();
}

void PlaneGraph::flip() {
    for (auto& [v, order] : rot_) std::reverse(order.begin(), order.end());
    touch();
}

void PlaneGraph::reserve_ids(VertexId v, EdgeId e) {
    next_v_ = std::max(next_v_, v);
    next_e_ = std::max(next_e_, e);
}

void PlaneGraph::check_edge(EdgeId e) const {
    if (!edges_.count(e)) throw GraphError(Err::Internal, "unknown edge id " + std::to_string(e));
}

void PlaneGraph::check_vertex(VertexId v) const {
    if (!rot_.count(v)) throw GraphError(Err::Internal, "unknown vertex id " + std::to_string(v));
}

DegreeProfile degree_profile(const PlaneGraph& g) {
    DegreeProfile p;
    bool first = true;
    for (VertexId v : g.vertices()) {
        int d = g.degree(v);
        p.per_vertex[v] = d;
        if (first) {
            p.min_degree = p.max_degree = d;
            first = false;
        } else {
            p.min_degree = std::min(p.min_degree, d);
            p.max_degree = std::max(p.max_degree, d);
        }
    }
    return p;
}

bool is_regular(const PlaneGraph& g, int k) {
    for (VertexId v : g.vertices())
        if (g.degree(v) != k) return false;
    return true;
}

bool is_simple(const PlaneGraph& g) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.endpoints(e);
        if (u == v) return false;
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) return false;
    }
    return true;
}

}  // namespace planarforge
