#include "planarforge/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace planarforge {

namespace {

// Compact adjacency view with stable vertex order.
struct AdjView {
    std::vector<VertexId> ids;               // index -> vertex id
    std::map<VertexId, int> index;           // vertex id -> index
    std::vector<std::vector<int>> adj;       // parallel edges collapsed
    std::vector<std::vector<std::pair<int, EdgeId>>> inc;  // neighbor idx, edge id

    explicit AdjView(const PlaneGraph& g) {
        ids = g.vertices();
        for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
        adj.resize(ids.size());
        inc.resize(ids.size());
        std::vector<std::set<int>> seen(ids.size());
        for (EdgeId e : g.edge_ids()) {
            auto [u, v] = g.endpoints(e);
            int a = index.at(u), b = index.at(v);
            inc[a].push_back({b, e});
            inc[b].push_back({a, e});
            if (seen[a].insert(b).second) adj[a].push_back(b);
            if (seen[b].insert(a).second) adj[b].push_back(a);
        }
    }
    int n() const { return static_cast<int>(ids.size()); }
};

bool connected_without(const AdjView& v, const std::vector<char>& removed) {
    int start = -1, alive = 0;
    for (int i = 0; i < v.n(); ++i)
        if (!removed[i]) {
            ++alive;
            if (start < 0) start = i;
        }
    if (alive <= 1) return true;
    std::vector<char> vis(v.n(), 0);
    std::queue<int> q;
    q.push(start);
    vis[start] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : v.adj[a]) {
            if (removed[b] || vis[b]) continue;
            vis[b] = 1;
            ++cnt;
            q.push(b);
        }
    }
    return cnt == alive;
}

// articulation points of the graph restricted to !removed, via lowpoints
std::vector<int> articulation_points(const AdjView& v, const std::vector<char>& removed) {
    int n = v.n();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<char> artic(n, 0);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (removed[root] || disc[root] >= 0) continue;
        // iterative DFS
        std::vector<std::pair<int, size_t>> stack;
        stack.push_back({root, 0});
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& [a, i] = stack.back();
            if (i < v.adj[a].size()) {
                int b = v.adj[a][i++];
                if (removed[b]) continue;
                if (disc[b] < 0) {
                    parent[b] = a;
                    if (a == root) ++root_children;
                    disc[b] = low[b] = timer++;
                    stack.push_back({b, 0});
                } else if (b != parent[a]) {
                    low[a] = std::min(low[a], disc[b]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[a]);
                    if (p != root && low[a] >= disc[p]) artic[p] = 1;
                }
            }
        }
        if (root_children >= 2) artic[root] = 1;
    }
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (artic[i]) out.push_back(i);
    return out;
}

}  // namespace

bool is_connected(const PlaneGraph& g) { return g.is_connected(); }

CutCensus cut_census(const PlaneGraph& g) {
    if (!g.is_connected()) throw GraphError(Err::Disconnected, "cut census needs a connected graph");
    AdjView v(g);
    CutCensus c;
    std::vector<char> removed(v.n(), 0);
    for (int i : articulation_points(v, removed)) c.cut_vertices.insert(v.ids[i]);
    for (int a = 0; a < v.n(); ++a) {
        removed.assign(v.n(), 0);
        removed[a] = 1;
        // remaining graph may be disconnected already (a is a cut vertex);
        // {a,b} is a 2-cut iff removing b disconnects some component further
        // or separates existing components' remainders. Enumerate via
        // articulation points of G-a plus pair checks for disconnected cases.
        if (v.n() - 1 <= 2) continue;
        bool base_connected = connected_without(v, removed);
        if (base_connected) {
            for (int b : articulation_points(v, removed)) {
                if (b == a) continue;
                auto p = std::minmax(v.ids[a], v.ids[b]);
                c.separation_pairs.insert({p.first, p.second});
            }
        } else {
            // G-a disconnected: any b whose removal still leaves >=2
            // components among the other vertices forms a 2-cut with a.
            for (int b = 0; b < v.n(); ++b) {
                if (b == a) continue;
                removed[b] = 1;
                if (!connected_without(v, removed)) {
                    auto p = std::minmax(v.ids[a], v.ids[b]);
                    c.separation_pairs.insert({p.first, p.second});
                }
                removed[b] = 0;
            }
        }
    }
    return c;
}

CutCensus cut_census_bruteforce(const PlaneGraph& g) {
    if (!g.is_connected()) throw GraphError(Err::Disconnected, "cut census needs a connected graph");
    AdjView v(g);
    CutCensus c;
    std::vector<char> removed(v.n(), 0);
    for (int a = 0; a < v.n(); ++a) {
        removed.assign(v.n(), 0);
        removed[a] = 1;
        if (v.n() - 1 >= 2 && !connected_without(v, removed)) c.cut_vertices.insert(v.ids[a]);
    }
    for (int a = 0; a < v.n(); ++a)
        for (int b = a + 1; b < v.n(); ++b) {
            if (v.n() - 2 < 2) continue;
            removed.assign(v.n(), 0);
            removed[a] = removed[b] = 1;
            if (!connected_without(v, removed)) {
                auto p = std::minmax(v.ids[a], v.ids[b]);
                c.separation_pairs.insert({p.first, p.second});
            }
        }
    return c;
}

bool is_biconnected(const PlaneGraph& g) {
    if (!g.is_connected()) return false;
    if (g.num_vertices() < 3) return g.num_vertices() == 2 && g.num_edges() >= 1;
    AdjView v(g);
    std::vector<char> removed(v.n(), 0);
    return articulation_points(v, removed).empty();
}

bool is_triconnected(const PlaneGraph& g) {
    if (g.num_vertices() < 4)
        throw GraphError(Err::TooSmall, "triconnectivity needs at least 4 vertices");
    if (!g.is_connected()) return false;
    if (!is_biconnected(g)) return false;
    return cut_census(g).separation_pairs.empty();
}

bool is_internally_triconnected(const PlaneGraph& g, std::optional<Dart> outer) {
    if (!is_biconnected(g)) throw GraphError(Err::NotBiconnected, "input must be biconnected");
    std::optional<Dart> od = outer ? outer : g.outer_dart();
    if (!od) throw GraphError(Err::Internal, "internally_triconnected: no outer face given");
    const Face& f = g.faces()[g.face_of(*od)];
    std::set<VertexId> boundary;
    for (const Dart& d : f.walk) boundary.insert(d.tail);
    PlaneGraph h = g;
    VertexId apex = h.add_vertex();
    for (VertexId v : boundary) h.add_edge(apex, v);
    if (h.num_vertices() < 4) return false;
    return is_triconnected(h);
}

BlockDecomposition blocks(const PlaneGraph& g) {
    AdjView v(g);
    BlockDecomposition out;
    int n = v.n();
    if (n == 0) return out;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, EdgeId>> estack;
    int timer = 0;
    std::vector<EdgeId> parent_edge(n, -1);

    std::function<void(int)> dfs2 = [&](int a) {
        disc[a] = low[a] = timer++;
        for (auto [b, e] : v.inc[a]) {
            if (e == parent_edge[a]) continue;
            if (disc[b] < 0) {
                estack.push_back({a, e});
                parent[b] = a;
                parent_edge[b] = e;
                dfs2(b);
                low[a] = std::min(low[a], low[b]);
                if (low[b] >= disc[a]) {
                    std::vector<EdgeId> block;
                    while (true) {
                        auto [src, be] = estack.back();
                        estack.pop_back();
                        block.push_back(be);
                        if (be == e) break;
                    }
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    out.blocks.push_back(block);
                }
            } else if (disc[b] < disc[a]) {
                estack.push_back({a, e});
                low[a] = std::min(low[a], disc[b]);
            }
        }
    };
    for (int i = 0; i < n; ++i)
        if (disc[i] < 0 && !v.inc[i].empty()) dfs2(i);

    // deterministic block order: by smallest edge id
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    // cut vertices: vertices in >= 2 blocks
    std::map<VertexId, std::set<int>> touch;
    for (size_t bi = 0; bi < out.blocks.size(); ++bi)
        for (EdgeId e : out.blocks[bi]) {
            auto [x, y] = g.endpoints(e);
            touch[x].insert(static_cast<int>(bi));
            touch[y].insert(static_cast<int>(bi));
        }
    for (const auto& [vertex, bs] : touch)
        if (bs.size() >= 2)
            out.cut_vertex_incidence[vertex] = std::vector<int>(bs.begin(), bs.end());
    return out;
}

}  // namespace planarforge
