#include "planarforge/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <queue>

namespace planarforge {

OracleBudget OracleBudget::from_env() {
    OracleBudget b;
    if (const char* s = std::getenv("PLANAR_FORGE_BUDGET")) {
        int cap = std::atoi(s);
        if (cap > 0) {
            b.mis_vertex_cap = cap;
            b.coloring_vertex_cap = cap;
            b.steiner_vertex_cap = cap;
        }
    }
    return b;
}

OracleBudget OracleBudget::unlimited() {
    OracleBudget b;
    b.mis_vertex_cap = b.coloring_vertex_cap = b.steiner_vertex_cap =
        std::numeric_limits<int>::max();
    b.steiner_terminal_cap = 20;
    b.steiner_small_vertex_cap = 25;
    return b;
}

namespace {

struct SimpleAdj {
    std::vector<VertexId> ids;
    std::map<VertexId, int> index;
    std::vector<std::vector<int>> adj;

    explicit SimpleAdj(const PlaneGraph& g) {
        ids = g.vertices();
        for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
        adj.resize(ids.size());
        std::vector<std::set<int>> s(ids.size());
        for (EdgeId e : g.edge_ids()) {
            auto [u, v] = g.endpoints(e);
            int a = index.at(u), b = index.at(v);
            if (a != b && s[a].insert(b).second) {
                adj[a].push_back(b);
                s[b].insert(a);
                adj[b].push_back(a);
            }
        }
        for (auto& row : adj) std::sort(row.begin(), row.end());
    }
    int n() const { return static_cast<int>(ids.size()); }
};

// ---------------------------------------------------------------- MIS

struct MisSolver {
    const SimpleAdj& v;
    std::vector<char> forced_in;   // locked into the solution
    std::vector<char> forbidden;   // locked out
    int best = -1;

    explicit MisSolver(const SimpleAdj& a)
        : v(a), forced_in(a.n(), 0), forbidden(a.n(), 0) {}

    // candidate set as sorted vector of indices
    int solve() {
        std::vector<int> cand;
        int base = 0;
        for (int i = 0; i < v.n(); ++i) {
            if (forced_in[i]) ++base;
            else if (!forbidden[i]) cand.push_back(i);
        }
        best = -1;
        rec(cand, 0);
        return base + best;
    }

  private:
    void rec(std::vector<int> cand, int cur) {
        // greedy reductions: degree 0 and 1 vertices are always safe picks
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < cand.size(); ++i) {
                int a = cand[i];
                int deg = 0, nb = -1;
                for (int b : v.adj[a])
                    if (std::binary_search(cand.begin(), cand.end(), b)) {
                        ++deg;
                        nb = b;
                    }
                if (deg == 0) {
                    ++cur;
                    cand.erase(cand.begin() + i);
                    changed = true;
                    break;
                }
                if (deg == 1) {
                    ++cur;
                    std::vector<int> next;
                    for (int c : cand)
                        if (c != a && c != nb) next.push_back(c);
                    cand = std::move(next);
                    changed = true;
                    break;
                }
            }
        }
        if (static_cast<int>(cand.size()) + cur <= best) return;
        if (cand.empty()) {
            best = std::max(best, cur);
            return;
        }
        // branch on a maximum-degree vertex
        int pick = cand[0], pd = -1;
        for (int a : cand) {
            int deg = 0;
            for (int b : v.adj[a])
                if (std::binary_search(cand.begin(), cand.end(), b)) ++deg;
            if (deg > pd) {
                pd = deg;
                pick = a;
            }
        }
        // include pick
        {
            std::vector<int> next;
            for (int c : cand)
                if (c != pick && !std::binary_search(v.adj[pick].begin(), v.adj[pick].end(), c))
                    next.push_back(c);
            rec(std::move(next), cur + 1);
        }
        // exclude pick
        {
            std::vector<int> next;
            for (int c : cand)
                if (c != pick) next.push_back(c);
            rec(std::move(next), cur);
        }
    }
};

void verify_independent(const SimpleAdj& v, const std::set<VertexId>& w) {
    for (VertexId a : w)
        for (int bi : v.adj[v.index.at(a)])
            if (w.count(v.ids[bi]))
                throw GraphError(Err::Internal, "oracle produced a dependent witness");
}

// ---------------------------------------------------------------- coloring

struct ColorSolver {
    const SimpleAdj& v;
    std::vector<int> color;  // 0 = unset, else 1..3

    explicit ColorSolver(const SimpleAdj& a) : v(a), color(a.n(), 0) {}

    bool solve() {
        int done = 0;
        for (int c : color)
            if (c) ++done;
        return rec(done);
    }

  private:
    int pick() const {
        // max saturation, then max degree, then lowest index
        int best = -1, bs = -1, bd = -1;
        for (int i = 0; i < v.n(); ++i) {
            if (color[i]) continue;
            std::set<int> sat;
            for (int b : v.adj[i])
                if (color[b]) sat.insert(color[b]);
            int s = static_cast<int>(sat.size());
            int d = static_cast<int>(v.adj[i].size());
            if (s > bs || (s == bs && d > bd)) {
                best = i;
                bs = s;
                bd = d;
            }
        }
        return best;
    }

    bool rec(int done) {
        if (done == v.n()) return true;
        int a = pick();
        bool used[4] = {false, false, false, false};
        for (int b : v.adj[a])
            if (color[b]) used[color[b]] = true;
        for (int c = 1; c <= 3; ++c) {
            if (used[c]) continue;
            color[a] = c;
            if (rec(done + 1)) return true;
            color[a] = 0;
        }
        return false;
    }
};

// ---------------------------------------------------------------- steiner

struct WeightedAdj {
    std::vector<VertexId> ids;
    std::map<VertexId, int> index;
    std::vector<std::vector<std::pair<int, std::pair<Weight, EdgeId>>>> adj;

    WeightedAdj(const PlaneGraph& g, const std::map<EdgeId, Weight>& weights) {
        ids = g.vertices();
        for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
        adj.resize(ids.size());
        for (EdgeId e : g.edge_ids()) {
            auto [u, v] = g.endpoints(e);
            Weight w = 1;
            if (auto it = weights.find(e); it != weights.end()) w = it->second;
            if (w < 0) throw GraphError(Err::Internal, "negative edge weight");
            int a = index.at(u), b = index.at(v);
            adj[a].push_back({b, {w, e}});
            adj[b].push_back({a, {w, e}});
        }
    }
    int n() const { return static_cast<int>(ids.size()); }
};

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

std::vector<Weight> dijkstra(const WeightedAdj& g, int src, std::vector<std::pair<int, EdgeId>>* parent) {
    std::vector<Weight> dist(g.n(), kInf);
    if (parent) parent->assign(g.n(), {-1, -1});
    std::priority_queue<std::pair<Weight, int>, std::vector<std::pair<Weight, int>>, std::greater<>> pq;
    dist[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
        auto [d, a] = pq.top();
        pq.pop();
        if (d != dist[a]) continue;
        for (auto [b, we] : g.adj[a]) {
            Weight nd = d + we.first;
            if (nd < dist[b]) {
                dist[b] = nd;
                if (parent) (*parent)[b] = {a, we.second};
                pq.push({nd, b});
            }
        }
    }
    return dist;
}

SteinerResult steiner_dreyfus_wagner(const PlaneGraph& g, const std::set<VertexId>& terminals,
                                     const std::map<EdgeId, Weight>& weights) {
    WeightedAdj wa(g, weights);
    std::vector<int> ts;
    for (VertexId t : terminals) ts.push_back(wa.index.at(t));
    int k = static_cast<int>(ts.size());
    int n = wa.n();

    int full = (1 << k) - 1;
    // dp[S][v]: min weight of a tree spanning the terminals in S plus v
    std::vector<std::vector<Weight>> dp(full + 1, std::vector<Weight>(n, kInf));
    struct Back {
        int kind = 0;  // 0 none, 1 split (arg = subset), 2 edge step
        int arg = -1;  // subset or predecessor vertex
        EdgeId edge = -1;
    };
    std::vector<std::vector<Back>> back(full + 1, std::vector<Back>(n));

    for (int i = 0; i < k; ++i) dp[1 << i][ts[i]] = 0;

    for (int S = 1; S <= full; ++S) {
        if (__builtin_popcount(S) >= 2) {
            for (int v = 0; v < n; ++v) {
                for (int T = (S - 1) & S; T; T = (T - 1) & S) {
                    if (T > (S ^ T)) continue;  // each split once
                    if (dp[T][v] == kInf || dp[S ^ T][v] == kInf) continue;
                    Weight w = dp[T][v] + dp[S ^ T][v];
                    if (w < dp[S][v]) {
                        dp[S][v] = w;
                        back[S][v] = {1, T, -1};
                    }
                }
            }
        }
        // one Dijkstra pass seeded with the current dp row
        std::priority_queue<std::pair<Weight, int>, std::vector<std::pair<Weight, int>>,
                            std::greater<>> pq;
        for (int v = 0; v < n; ++v)
            if (dp[S][v] < kInf) pq.push({dp[S][v], v});
        while (!pq.empty()) {
            auto [d, a] = pq.top();
            pq.pop();
            if (d != dp[S][a]) continue;
            for (auto [b, we] : wa.adj[a]) {
                Weight nd = d + we.first;
                if (nd < dp[S][b]) {
                    dp[S][b] = nd;
                    back[S][b] = {2, a, we.second};
                    pq.push({nd, b});
                }
            }
        }
    }
    int root = ts[0];
    SteinerResult res;
    res.weight = dp[full][root];

    std::set<EdgeId> tree;
    std::function<void(int, int)> emit = [&](int S, int v) {
        while (true) {
            Back b = back[S][v];
            if (b.kind == 0) return;
            if (b.kind == 1) {
                emit(b.arg, v);
                S ^= b.arg;
                continue;
            }
            tree.insert(b.edge);
            v = b.arg;
        }
    };
    if (res.weight < kInf) emit(full, root);
    res.witness.assign(tree.begin(), tree.end());
    return res;
}

SteinerResult steiner_induced_mst(const PlaneGraph& g, const std::set<VertexId>& terminals,
                                  const std::map<EdgeId, Weight>& weights) {
    WeightedAdj wa(g, weights);
    std::vector<int> extra;
    std::vector<char> is_term(wa.n(), 0);
    for (VertexId t : terminals) is_term[wa.index.at(t)] = 1;
    for (int i = 0; i < wa.n(); ++i)
        if (!is_term[i]) extra.push_back(i);
    int m = static_cast<int>(extra.size());
    if (m > 24) throw GraphError(Err::BudgetExceeded, "steiner exhaustive fallback too large");

    SteinerResult best;
    best.weight = kInf;
    for (std::int64_t mask = 0; mask < (1ll << m); ++mask) {
        std::vector<char> in(wa.n(), 0);
        for (int i = 0; i < wa.n(); ++i) in[i] = is_term[i];
        for (int i = 0; i < m; ++i)
            if (mask & (1ll << i)) in[extra[i]] = 1;
        // Prim MST over the induced subgraph
        std::vector<int> nodes;
        for (int i = 0; i < wa.n(); ++i)
            if (in[i]) nodes.push_back(i);
        if (nodes.empty()) continue;
        std::vector<char> used(wa.n(), 0);
        std::priority_queue<std::tuple<Weight, int, EdgeId>, std::vector<std::tuple<Weight, int, EdgeId>>,
                            std::greater<>> pq;
        used[nodes[0]] = 1;
        int cnt = 1;
        Weight total = 0;
        std::vector<EdgeId> tree;
        for (auto [b, we] : wa.adj[nodes[0]])
            if (in[b]) pq.push({we.first, b, we.second});
        while (!pq.empty() && cnt < static_cast<int>(nodes.size())) {
            auto [w, a, e] = pq.top();
            pq.pop();
            if (used[a]) continue;
            used[a] = 1;
            ++cnt;
            total += w;
            tree.push_back(e);
            for (auto [b, we] : wa.adj[a])
                if (in[b] && !used[b]) pq.push({we.first, b, we.second});
        }
        if (cnt != static_cast<int>(nodes.size())) continue;  // induced graph disconnected
        if (total < best.weight) {
            best.weight = total;
            std::sort(tree.begin(), tree.end());
            best.witness = tree;
        }
    }
    return best;
}

void verify_steiner_witness(const PlaneGraph& g, const std::set<VertexId>& terminals,
                            const std::map<EdgeId, Weight>& weights, const SteinerResult& r) {
    if (terminals.empty()) return;
    Weight total = 0;
    std::map<VertexId, std::vector<VertexId>> adj;
    std::set<VertexId> verts;
    for (EdgeId e : r.witness) {
        auto [u, v] = g.endpoints(e);
        Weight w = 1;
        if (auto it = weights.find(e); it != weights.end()) w = it->second;
        total += w;
        adj[u].push_back(v);
        adj[v].push_back(u);
        verts.insert(u);
        verts.insert(v);
    }
    if (total != r.weight) throw GraphError(Err::Internal, "steiner witness weight mismatch");
    // connected and spans terminals
    VertexId start = *terminals.begin();
    if (!verts.count(start) && terminals.size() > 1)
        throw GraphError(Err::Internal, "steiner witness misses a terminal");
    std::set<VertexId> seen{start};
    std::queue<VertexId> q;
    q.push(start);
    while (!q.empty()) {
        VertexId a = q.front();
        q.pop();
        for (VertexId b : adj[a])
            if (seen.insert(b).second) q.push(b);
    }
    for (VertexId t : terminals)
        if (t != start && !seen.count(t))
            throw GraphError(Err::Internal, "steiner witness does not span terminals");
    if (!r.witness.empty() && verts.size() != r.witness.size() + 1)
        throw GraphError(Err::Internal, "steiner witness is not a tree");
}

}  // namespace

MisResult max_independent_set(const PlaneGraph& g, const OracleBudget& budget) {
    if (g.num_vertices() > budget.mis_vertex_cap)
        throw GraphError(Err::BudgetExceeded, "MIS oracle vertex cap exceeded");
    SimpleAdj v(g);
    MisSolver solver(v);
    MisResult res;
    res.alpha = v.n() == 0 ? 0 : solver.solve();

    // lexicographically smallest witness by greedy forcing
    MisSolver probe(v);
    int remaining = res.alpha;
    for (int i = 0; i < v.n() && remaining > 0; ++i) {
        if (probe.forbidden[i] || probe.forced_in[i]) continue;
        probe.forced_in[i] = 1;
        std::vector<char> fb = probe.forbidden;
        for (int b : v.adj[i]) probe.forbidden[b] = 1;
        if (probe.solve() == res.alpha) {
            res.witness.insert(v.ids[i]);
            --remaining;
        } else {
            probe.forced_in[i] = 0;
            probe.forbidden = fb;
            probe.forbidden[i] = 1;
        }
    }
    verify_independent(v, res.witness);
    if (static_cast<int>(res.witness.size()) != res.alpha)
        throw GraphError(Err::Internal, "MIS witness size mismatch");
    return res;
}

MisResult max_independent_set_exhaustive(const PlaneGraph& g) {
    SimpleAdj v(g);
    if (v.n() > 20) throw GraphError(Err::BudgetExceeded, "exhaustive MIS cap is 20");
    MisResult best;
    best.alpha = 0;
    for (std::uint32_t mask = 0; mask < (1u << v.n()); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < best.alpha) continue;
        bool ok = true;
        for (int a = 0; a < v.n() && ok; ++a) {
            if (!(mask & (1u << a))) continue;
            for (int b : v.adj[a])
                if (b > a && (mask & (1u << b))) {
                    ok = false;
                    break;
                }
        }
        if (!ok) continue;
        std::set<VertexId> w;
        for (int a = 0; a < v.n(); ++a)
            if (mask & (1u << a)) w.insert(v.ids[a]);
        if (size > best.alpha || (size == best.alpha && w < best.witness) || best.witness.empty()) {
            best.alpha = size;
            best.witness = w;
        }
    }
    return best;
}

ColoringResult is_3colorable(const PlaneGraph& g, const OracleBudget& budget) {
    if (g.num_vertices() > budget.coloring_vertex_cap)
        throw GraphError(Err::BudgetExceeded, "3-coloring oracle vertex cap exceeded");
    SimpleAdj v(g);
    ColorSolver solver(v);
    ColoringResult res;
    res.colorable = solver.solve();
    if (!res.colorable) return res;

    if (v.n() > 60) {
        // deterministic witness without the lexicographic refinement pass
        for (int i = 0; i < v.n(); ++i) res.witness[v.ids[i]] = solver.color[i];
        return res;
    }

    // lexicographically smallest proper coloring by greedy forcing
    ColorSolver probe(v);
    for (int i = 0; i < v.n(); ++i) {
        for (int c = 1; c <= 3; ++c) {
            bool clash = false;
            for (int b : v.adj[i])
                if (b < i && probe.color[b] == c) clash = true;
            if (clash) continue;
            std::vector<int> saved = probe.color;
            probe.color[i] = c;
            bool feasible;
            {
                ColorSolver inner(v);
                inner.color = probe.color;
                feasible = inner.solve();
            }
            if (feasible) break;
            probe.color = saved;
        }
        if (!probe.color[i]) throw GraphError(Err::Internal, "coloring refinement failed");
    }
    for (int i = 0; i < v.n(); ++i) {
        res.witness[v.ids[i]] = probe.color[i];
        for (int b : v.adj[i])
            if (probe.color[b] == probe.color[i])
                throw GraphError(Err::Internal, "coloring witness improper");
    }
    return res;
}

std::optional<std::map<VertexId, int>> extend_3coloring(const PlaneGraph& g,
                                                        const std::map<VertexId, int>& pinned) {
    SimpleAdj v(g);
    ColorSolver solver(v);
    for (const auto& [vertex, c] : pinned) {
        if (c < 1 || c > 3) throw GraphError(Err::Internal, "pinned color out of range");
        solver.color[v.index.at(vertex)] = c;
    }
    // reject improper pins up front
    for (int i = 0; i < v.n(); ++i)
        for (int b : v.adj[i])
            if (solver.color[i] && solver.color[i] == solver.color[b]) return std::nullopt;
    if (!solver.solve()) return std::nullopt;
    std::map<VertexId, int> out;
    for (int i = 0; i < v.n(); ++i) out[v.ids[i]] = solver.color[i];
    return out;
}

ColoringResult is_3colorable_exhaustive(const PlaneGraph& g) {
    SimpleAdj v(g);
    if (v.n() > 16) throw GraphError(Err::BudgetExceeded, "exhaustive coloring cap is 16");
    std::vector<int> color(v.n(), 1);
    while (true) {
        bool ok = true;
        for (int a = 0; a < v.n() && ok; ++a)
            for (int b : v.adj[a])
                if (b > a && color[a] == color[b]) {
                    ok = false;
                    break;
                }
        if (ok) {
            ColoringResult res;
            res.colorable = true;
            for (int i = 0; i < v.n(); ++i) res.witness[v.ids[i]] = color[i];
            return res;
        }
        int i = v.n() - 1;
        while (i >= 0 && color[i] == 3) color[i--] = 1;
        if (i < 0) return {};
        ++color[i];
    }
}

SteinerResult steiner_tree(const PlaneGraph& g, const std::set<VertexId>& terminals,
                           const std::map<EdgeId, Weight>& weights, const OracleBudget& budget) {
    for (VertexId t : terminals)
        if (!g.has_vertex(t)) throw GraphError(Err::Internal, "steiner terminal not in graph");
    SteinerResult res;
    if (terminals.size() <= 1) return res;
    int n = g.num_vertices();
    int k = static_cast<int>(terminals.size());
    if (k <= budget.steiner_terminal_cap && n <= budget.steiner_vertex_cap) {
        res = steiner_dreyfus_wagner(g, terminals, weights);
    } else if (n <= budget.steiner_small_vertex_cap) {
        res = steiner_induced_mst(g, terminals, weights);
    } else {
        throw GraphError(Err::BudgetExceeded, "steiner oracle caps exceeded");
    }
    if (res.weight >= kInf) throw GraphError(Err::Internal, "terminals not connected");
    verify_steiner_witness(g, terminals, weights, res);
    return res;
}

SteinerResult steiner_tree_exhaustive(const PlaneGraph& g, const std::set<VertexId>& terminals,
                                      const std::map<EdgeId, Weight>& weights) {
    if (terminals.size() <= 1) return {};
    SteinerResult res = steiner_induced_mst(g, terminals, weights);
    if (res.weight >= kInf) throw GraphError(Err::Internal, "terminals not connected");
    verify_steiner_witness(g, terminals, weights, res);
    return res;
}

std::map<VertexId, std::map<VertexId, Weight>> all_pairs_shortest_paths(
    const PlaneGraph& g, const std::map<EdgeId, Weight>& weights) {
    WeightedAdj wa(g, weights);
    std::map<VertexId, std::map<VertexId, Weight>> out;
    for (int s = 0; s < wa.n(); ++s) {
        auto d = dijkstra(wa, s, nullptr);
        auto& row = out[wa.ids[s]];
        for (int t = 0; t < wa.n(); ++t)
            if (d[t] < kInf) row[wa.ids[t]] = d[t];
    }
    return out;
}

std::map<VertexId, std::map<VertexId, Weight>> all_pairs_shortest_paths_floyd(
    const PlaneGraph& g, const std::map<EdgeId, Weight>& weights) {
    WeightedAdj wa(g, weights);
    int n = wa.n();
    std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, kInf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (int a = 0; a < n; ++a)
        for (auto [b, we] : wa.adj[a]) d[a][b] = std::min(d[a][b], we.first);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    std::map<VertexId, std::map<VertexId, Weight>> out;
    for (int i = 0; i < n; ++i) {
        auto& row = out[wa.ids[i]];
        for (int j = 0; j < n; ++j)
            if (d[i][j] < kInf) row[wa.ids[j]] = d[i][j];
    }
    return out;
}

}  // namespace planarforge
