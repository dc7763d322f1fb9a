#include "planarforge/canonical.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "planarforge/connectivity.hpp"

namespace planarforge {

namespace {

/// Induced embedded subgraph on S with its outer face designated: the face
/// that absorbs the region of g's outer face.
struct Induced {
    PlaneGraph graph;
    std::vector<VertexId> outer_cycle;  // boundary walk vertices, in walk order
    Dart outer{};
    bool outer_simple = false;
};

std::optional<Induced> induce_with_outer(const PlaneGraph& g, const std::set<VertexId>& S,
                                         Dart g_outer) {
    Induced out;
    std::map<EdgeId, std::pair<VertexId, VertexId>> edges;
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.endpoints(e);
        if (S.count(u) && S.count(v)) edges[e] = {u, v};
    }
    std::map<VertexId, std::vector<EdgeId>> rot;
    for (VertexId v : S) {
        std::vector<EdgeId> order;
        for (EdgeId e : g.rotation(v))
            if (edges.count(e)) order.push_back(e);
        rot[v] = order;
    }
    try {
        out.graph =
            PlaneGraph::build(std::vector<VertexId>(S.begin(), S.end()), edges, rot);
    } catch (const GraphError&) {
        return std::nullopt;  // the induced rotation system is not planar
    }
    // outer face: first dart of g's outer walk that survives
    const Face& gouter = g.faces()[g.face_of(g_outer)];
    std::optional<Dart> od;
    for (const Dart& d : gouter.walk)
        if (edges.count(d.edge)) {
            od = d;
            break;
        }
    if (!od) return std::nullopt;
    out.outer = *od;
    out.graph.set_outer(od);
    const Face& f = out.graph.faces()[out.graph.face_of(*od)];
    std::set<VertexId> seen;
    out.outer_simple = true;
    for (const Dart& d : f.walk) {
        out.outer_cycle.push_back(d.tail);
        if (!seen.insert(d.tail).second) out.outer_simple = false;
    }
    return out;
}

bool edge_on_cycle(const PlaneGraph& g, const std::vector<VertexId>& cycle, VertexId a,
                   VertexId b) {
    size_t n = cycle.size();
    for (size_t i = 0; i < n; ++i) {
        VertexId x = cycle[i], y = cycle[(i + 1) % n];
        if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
}

/// G_i prefix checks shared by the solver and the validator: biconnected,
/// internally 3-connected, outer cycle simple and carrying (v1,v2).
bool prefix_ok(const PlaneGraph& g, const std::set<VertexId>& S, Dart g_outer, VertexId v1,
               VertexId v2, std::string* why = nullptr) {
    auto ind = induce_with_outer(g, S, g_outer);
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (!ind) return fail("induced subgraph lost planarity or the outer face");
    if (!ind->graph.is_connected()) return fail("prefix disconnected");
    if (!is_biconnected(ind->graph)) return fail("prefix not biconnected");
    if (!ind->outer_simple) return fail("outer boundary is not a simple cycle");
    if (!edge_on_cycle(ind->graph, ind->outer_cycle, v1, v2))
        return fail("(v1,v2) not on the outer cycle");
    try {
        if (!is_internally_triconnected(ind->graph, ind->outer))
            return fail("prefix not internally 3-connected");
    } catch (const GraphError& e) {
        return fail(std::string("internal 3-connectivity check: ") + e.what());
    }
    return true;
}

}  // namespace

std::optional<std::vector<VertexId>> induced_outer_cycle(const PlaneGraph& g,
                                                         const std::set<VertexId>& S, Dart outer) {
    auto ind = induce_with_outer(g, S, outer);
    if (!ind || !ind->outer_simple) return std::nullopt;
    return ind->outer_cycle;
}

std::optional<std::vector<Dart>> induced_outer_walk(const PlaneGraph& g,
                                                    const std::set<VertexId>& S, Dart outer) {
    auto ind = induce_with_outer(g, S, outer);
    if (!ind || !ind->outer_simple) return std::nullopt;
    return ind->graph.faces()[ind->graph.face_of(ind->outer)].walk;
}

CanonicalOrdering canonical_ordering(const PlaneGraph& g3, Dart outer, VertexId v1, VertexId v2,
                                     VertexId vn) {
    if (!is_simple(g3)) throw GraphError(Err::NotTriconnected, "input must be simple");
    if (g3.num_vertices() < 4 || !is_triconnected(g3))
        throw GraphError(Err::NotTriconnected, "canonical ordering needs a 3-connected graph");
    const Face& of = g3.faces()[g3.face_of(outer)];
    std::vector<VertexId> ow;
    for (const Dart& d : of.walk) ow.push_back(d.tail);
    auto pos = [&](VertexId v) -> int {
        for (size_t i = 0; i < ow.size(); ++i)
            if (ow[i] == v) return static_cast<int>(i);
        return -1;
    };
    int p1 = pos(v1), p2 = pos(v2), pn = pos(vn);
    if (p1 < 0 || p2 < 0 || pn < 0)
        throw GraphError(Err::AnchorsNotOnOuterFace, "anchors must lie on the outer face");
    if (v1 == v2 || v1 == vn || v2 == vn)
        throw GraphError(Err::AnchorsNotOnOuterFace, "anchors must be distinct");
    if (!g3.find_edge(v1, v2))
        throw GraphError(Err::AnchorsNotOnOuterFace, "(v1,v2) must be an edge");
    // clockwise order along the outer walk: starting at v2 we meet v1 first
    {
        size_t n = ow.size();
        size_t d1 = (static_cast<size_t>(p1) + n - static_cast<size_t>(p2)) % n;
        size_t dn = (static_cast<size_t>(pn) + n - static_cast<size_t>(p2)) % n;
        if (!(d1 < dn))
            throw GraphError(Err::AnchorsNotClockwise,
                             "v2, v1, vn must appear clockwise along the outer face");
    }

    std::vector<VertexId> vlist = g3.vertices();
    std::set<VertexId> all(vlist.begin(), vlist.end());
    std::vector<std::vector<VertexId>> removed;  // P_k first
    std::set<std::set<VertexId>> dead;           // memo of failed states

    std::function<bool(std::set<VertexId>&)> solve = [&](std::set<VertexId>& S) -> bool {
        if (S.size() == 2) return S.count(v1) && S.count(v2);
        if (dead.count(S)) return false;

        auto ind = induce_with_outer(g3, S, outer);
        if (!ind || !ind->outer_simple) {
            dead.insert(S);
            return false;
        }
        const std::vector<VertexId>& C = ind->outer_cycle;
        bool first = (S.size() == all.size());

        auto has_outside_neighbor = [&](VertexId z) {
            for (EdgeId e : g3.rotation(z))
                if (!S.count(g3.other_end(e, z))) return true;
            return false;
        };
        auto try_part = [&](const std::vector<VertexId>& part) -> bool {
            std::set<VertexId> next = S;
            for (VertexId z : part) next.erase(z);
            if (next.size() == 2) {
                // G_1 is the bare edge (v1, v2); exempt from prefix checks
                if (!(next.count(v1) && next.count(v2))) return false;
            } else if (!prefix_ok(g3, next, outer, v1, v2)) {
                return false;
            }
            if (solve(next)) {
                removed.push_back(part);
                return true;
            }
            return false;
        };

        if (first) {
            // P_k is exactly (vn)
            if (try_part({vn})) return true;
            dead.insert(S);
            return false;
        }

        // singletons in ascending id order
        std::vector<VertexId> singles;
        for (VertexId z : C)
            if (z != v1 && z != v2 && has_outside_neighbor(z)) singles.push_back(z);
        std::sort(singles.begin(), singles.end());
        singles.erase(std::unique(singles.begin(), singles.end()), singles.end());
        for (VertexId z : singles)
            if (try_part({z})) return true;

        // chains: runs of consecutive outer vertices avoiding v1, v2
        size_t n = C.size();
        std::vector<std::vector<VertexId>> chains;
        for (size_t start = 0; start < n; ++start) {
            if (C[start] == v1 || C[start] == v2) continue;
            // only start a chain right after a blocked position to avoid dups
            VertexId prev = C[(start + n - 1) % n];
            (void)prev;
            for (size_t len = 2; len < n; ++len) {
                std::vector<VertexId> part;
                bool ok = true;
                for (size_t k = 0; k < len; ++k) {
                    VertexId z = C[(start + k) % n];
                    if (z == v1 || z == v2 || !has_outside_neighbor(z)) {
                        ok = false;
                        break;
                    }
                    part.push_back(z);
                }
                if (!ok) break;
                // chain neighbor conditions relative to G_{i-1}
                std::set<VertexId> in_chain(part.begin(), part.end());
                if (in_chain.size() != part.size()) break;
                bool cond = true;
                for (size_t k = 0; k < part.size() && cond; ++k) {
                    int below = 0;
                    for (EdgeId e : g3.rotation(part[k])) {
                        VertexId w = g3.other_end(e, part[k]);
                        if (S.count(w) && !in_chain.count(w)) ++below;
                    }
                    bool endpoint = (k == 0 || k + 1 == part.size());
                    if (endpoint ? below != 1 : below != 0) cond = false;
                }
                if (cond) chains.push_back(part);
            }
        }
        std::sort(chains.begin(), chains.end(),
                  [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
                      VertexId ma = *std::min_element(a.begin(), a.end());
                      VertexId mb = *std::min_element(b.begin(), b.end());
                      if (ma != mb) return ma < mb;
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
        for (const auto& part : chains)
            if (try_part(part)) return true;

        dead.insert(S);
        return false;
    };

    std::set<VertexId> S = all;
    if (!solve(S))
        throw GraphError(Err::NoCanonicalOrdering, "no canonical ordering found (internal)");

    CanonicalOrdering pi;
    pi.v1 = v1;
    pi.v2 = v2;
    pi.vn = vn;
    pi.parts.push_back({v1, v2});
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) pi.parts.push_back(*it);
    std::reverse(pi.parts.begin() + 1, pi.parts.end());
    return pi;
}

CanonicalReport validate_canonical_ordering(const PlaneGraph& g3, Dart outer,
                                            const CanonicalOrdering& pi) {
    CanonicalReport rep;
    auto bad = [&](const std::string& m) { rep.violations.push_back(m); };

    // partition check
    std::set<VertexId> seen;
    int total = 0;
    for (const auto& p : pi.parts) {
        for (VertexId v : p) {
            ++total;
            if (!g3.has_vertex(v)) bad("part mentions unknown vertex");
            if (!seen.insert(v).second) bad("parts overlap");
        }
        if (p.empty()) bad("empty part");
    }
    if (total != g3.num_vertices() || seen.size() != static_cast<size_t>(g3.num_vertices()))
        bad("parts do not partition V");
    if (pi.parts.size() < 2) {
        bad("need at least two parts");
        rep.valid = false;
        return rep;
    }
    const auto& first = pi.parts.front();
    if (!(first.size() == 2 && first[0] == pi.v1 && first[1] == pi.v2 &&
          g3.find_edge(pi.v1, pi.v2)))
        bad("P_1 must be the edge (v1,v2)");
    const auto& last = pi.parts.back();
    if (!(last.size() == 1 && last[0] == pi.vn)) bad("P_k must be (vn)");

    size_t k = pi.parts.size();
    std::set<VertexId> S;
    for (size_t i = 0; i < k; ++i) {
        for (VertexId v : pi.parts[i]) S.insert(v);
        if (i == 0) continue;
        auto ind = induce_with_outer(g3, S, outer);
        if (!ind) {
            bad("prefix " + std::to_string(i + 1) + " is not an embedded subgraph");
            break;
        }
        std::string why;
        if (!prefix_ok(g3, S, outer, pi.v1, pi.v2, &why)) {
            bad("prefix " + std::to_string(i + 1) + ": " + why);
            continue;
        }
        const auto& C = ind->outer_cycle;
        std::set<VertexId> onC(C.begin(), C.end());
        const auto& part = pi.parts[i];
        for (VertexId z : part)
            if (!onC.count(z)) bad("part vertex not on C_i at step " + std::to_string(i + 1));
        if (i + 1 == k) continue;  // conditions (a)/(b) apply to 1 < i < k

        std::set<VertexId> in_part(part.begin(), part.end());
        std::set<VertexId> below = S;
        for (VertexId z : part) below.erase(z);
        // every part vertex needs a neighbor above
        for (VertexId z : part) {
            bool up = false;
            for (EdgeId e : g3.rotation(z))
                if (!S.count(g3.other_end(e, z))) up = true;
            if (!up) bad("part vertex lacks a neighbour above at step " + std::to_string(i + 1));
        }
        if (part.size() >= 2) {
            // chain: consecutive, endpoint neighbor counts, interior isolation
            for (size_t j = 0; j + 1 < part.size(); ++j)
                if (!g3.find_edge(part[j], part[j + 1])) bad("chain is not a path");
            std::vector<VertexId> anchors;
            for (size_t j = 0; j < part.size(); ++j) {
                int cnt = 0;
                VertexId who = -1;
                for (EdgeId e : g3.rotation(part[j])) {
                    VertexId w = g3.other_end(e, part[j]);
                    if (below.count(w)) {
                        ++cnt;
                        who = w;
                    }
                }
                bool endpoint = (j == 0 || j + 1 == part.size());
                if (endpoint) {
                    if (cnt != 1) bad("chain endpoint must have exactly one neighbour below");
                    else anchors.push_back(who);
                } else if (cnt != 0) {
                    bad("chain interior vertex has neighbours below");
                }
            }
            if (anchors.size() == 2 && !g3.find_edge(anchors[0], anchors[1]))
                bad("the two chain anchors are not adjacent in G_{i-1}");
        }
    }
    // C_k is the outer face cycle
    {
        auto ind = induce_with_outer(g3, seen, outer);
        if (ind) {
            const Face& of = g3.faces()[g3.face_of(outer)];
            std::set<VertexId> want;
            for (const Dart& d : of.walk) want.insert(d.tail);
            std::set<VertexId> got(ind->outer_cycle.begin(), ind->outer_cycle.end());
            if (want != got) bad("C_k differs from the outer face cycle");
        }
    }
    rep.valid = rep.violations.empty();
    return rep;
}

}  // namespace planarforge
