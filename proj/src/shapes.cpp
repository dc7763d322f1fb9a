#include "planarforge/shapes.hpp"

namespace planarforge::shapes {

using VMap = std::map<VertexId, std::vector<EdgeId>>;
using EMap = std::map<EdgeId, std::pair<VertexId, VertexId>>;

static std::vector<VertexId> iota_v(int n) {
    std::vector<VertexId> v;
    for (int i = 0; i < n; ++i) v.push_back(i);
    return v;
}

PlaneGraph k4() {
    EMap e = {{0, {0, 1}}, {1, {1, 2}}, {2, {2, 0}}, {3, {0, 3}}, {4, {1, 3}}, {5, {2, 3}}};
    VMap r = {{0, {0, 3, 2}}, {1, {1, 4, 0}}, {2, {2, 5, 1}}, {3, {3, 4, 5}}};
    return PlaneGraph::build(iota_v(4), e, r);
}

PlaneGraph cycle(int n) {
    EMap e;
    VMap r;
    for (int i = 0; i < n; ++i) e[i] = {i, (i + 1) % n};
    for (int i = 0; i < n; ++i) r[i] = {i, (i + n - 1) % n};
    return PlaneGraph::build(iota_v(n), e, r);
}

PlaneGraph theta() {
    EMap e = {{0, {0, 2}}, {1, {2, 1}}, {2, {0, 3}}, {3, {3, 1}}, {4, {0, 4}}, {5, {4, 1}}};
    VMap r = {{0, {0, 2, 4}}, {1, {5, 3, 1}}, {2, {0, 1}}, {3, {2, 3}}, {4, {4, 5}}};
    return PlaneGraph::build(iota_v(5), e, r);
}

PlaneGraph wheel(int rim) {
    EMap e;
    VMap r;
    // rim edges: i-1 joins i and i+1 (vertices 1..rim), spokes rim-1+i joins 0,i
    for (int i = 1; i < rim; ++i) e[i - 1] = {i, i + 1};
    e[rim - 1] = {rim, 1};
    for (int i = 1; i <= rim; ++i) e[rim - 1 + i] = {0, i};
    std::vector<EdgeId> hub;
    for (int i = 1; i <= rim; ++i) hub.push_back(rim - 1 + i);
    r[0] = hub;
    for (int i = 1; i <= rim; ++i) {
        EdgeId next = (i == rim) ? rim - 1 : i - 1;
        EdgeId prev = (i == 1) ? rim - 1 : i - 2;
        r[i] = {next, rim - 1 + i, prev};
    }
    return PlaneGraph::build(iota_v(rim + 1), e, r);
}

PlaneGraph antiprism(int n) {
    EMap e;
    VMap r;
    for (int i = 0; i < n; ++i) e[i] = {i, (i + 1) % n};                    // outer
    for (int i = 0; i < n; ++i) e[n + i] = {n + i, n + (i + 1) % n};        // inner
    for (int i = 0; i < n; ++i) e[2 * n + i] = {i, n + i};                  // strut right
    for (int i = 0; i < n; ++i) e[3 * n + i] = {i, n + (i + n - 1) % n};    // strut left
    for (int i = 0; i < n; ++i)
        r[i] = {i, 2 * n + i, 3 * n + i, (i + n - 1) % n};
    for (int i = 0; i < n; ++i)
        r[n + i] = {3 * n + (i + 1) % n, n + i, n + (i + n - 1) % n, 2 * n + i};
    return PlaneGraph::build(iota_v(2 * n), e, r);
}

PlaneGraph octahedron() { return antiprism(3); }

PlaneGraph prism(int n) {
    EMap e;
    VMap r;
    for (int i = 0; i < n; ++i) e[i] = {i, (i + 1) % n};
    for (int i = 0; i < n; ++i) e[n + i] = {n + i, n + (i + 1) % n};
    for (int i = 0; i < n; ++i) e[2 * n + i] = {i, n + i};
    for (int i = 0; i < n; ++i) r[i] = {i, 2 * n + i, (i + n - 1) % n};
    for (int i = 0; i < n; ++i) r[n + i] = {2 * n + i, n + i, n + (i + n - 1) % n};
    return PlaneGraph::build(iota_v(2 * n), e, r);
}

PlaneGraph cube() { return prism(4); }

PlaneGraph two_block_cubic_8() {
    EMap e = {{0, {0, 2}}, {1, {2, 1}}, {2, {0, 3}}, {3, {3, 1}}, {4, {2, 3}},
              {5, {4, 6}}, {6, {6, 5}}, {7, {4, 7}}, {8, {7, 5}}, {9, {6, 7}},
              {10, {1, 4}}, {11, {5, 0}}};
    VMap r = {{0, {0, 2, 11}}, {1, {10, 3, 1}}, {2, {1, 4, 0}}, {3, {4, 3, 2}},
              {4, {5, 7, 10}}, {5, {11, 8, 6}}, {6, {6, 9, 5}}, {7, {9, 8, 7}}};
    return PlaneGraph::build(iota_v(8), e, r);
}

PlaneGraph path(int edges) {
    EMap e;
    VMap r;
    for (int i = 0; i < edges; ++i) e[i] = {i, i + 1};
    r[0] = {0};
    for (int i = 1; i < edges; ++i) r[i] = {i - 1, i};
    r[edges] = {edges - 1};
    return PlaneGraph::build(iota_v(edges + 1), e, r);
}

}  // namespace planarforge::shapes
