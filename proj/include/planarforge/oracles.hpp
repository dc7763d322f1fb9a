#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "planarforge/pg_io.hpp"
#include "planarforge/plane_graph.hpp"

namespace planarforge {

/// Solvers refuse inputs above these caps instead of degrading.
struct OracleBudget {
    int mis_vertex_cap = 44;
    int coloring_vertex_cap = 32;
    int steiner_vertex_cap = 200;
    int steiner_terminal_cap = 10;
    int steiner_small_vertex_cap = 20;  // unrestricted-terminal fallback

    /// Reads PLANAR_FORGE_BUDGET (a single integer applied to every vertex
    /// cap) on top of the defaults.
    static OracleBudget from_env();
    static OracleBudget unlimited();
};

struct MisResult {
    int alpha = 0;
    std::set<VertexId> witness;  // lexicographically smallest maximum set
};

/// Exact maximum independent set via branch and bound with degree pruning.
/// Throws BudgetExceeded above the cap. The witness is verified independent.
MisResult max_independent_set(const PlaneGraph& g, const OracleBudget& budget = OracleBudget::from_env());

/// Exhaustive twin for cross-checks; |V| <= 20.
MisResult max_independent_set_exhaustive(const PlaneGraph& g);

struct ColoringResult {
    bool colorable = false;
    std::map<VertexId, int> witness;  // colors in {1,2,3}; empty on refutation
};

/// Exact 3-colorability via backtracking with saturation ordering. If
/// colorable, the witness is the lexicographically smallest proper coloring.
ColoringResult is_3colorable(const PlaneGraph& g, const OracleBudget& budget = OracleBudget::from_env());

/// Exact 3-coloring of a graph with some vertices pre-colored; used for
/// gadget extension checks. No budget (callers pass small graphs).
std::optional<std::map<VertexId, int>> extend_3coloring(const PlaneGraph& g,
                                                        const std::map<VertexId, int>& pinned);

ColoringResult is_3colorable_exhaustive(const PlaneGraph& g);

struct SteinerResult {
    Weight weight = 0;               // total weight (edge count when unweighted)
    std::vector<EdgeId> witness;     // tree edges
};

/// Exact Steiner tree: Dreyfus-Wagner over terminal subsets, or induced-MST
/// enumeration when the non-terminal count is small. Unweighted edges count 1.
SteinerResult steiner_tree(const PlaneGraph& g, const std::set<VertexId>& terminals,
                           const std::map<EdgeId, Weight>& weights = {},
                           const OracleBudget& budget = OracleBudget::from_env());

/// Independent exhaustive twin (induced-MST over vertex subsets).
SteinerResult steiner_tree_exhaustive(const PlaneGraph& g, const std::set<VertexId>& terminals,
                                      const std::map<EdgeId, Weight>& weights = {});

/// Exact all-pairs distances (Dijkstra per source; weights default to 1).
std::map<VertexId, std::map<VertexId, Weight>> all_pairs_shortest_paths(
    const PlaneGraph& g, const std::map<EdgeId, Weight>& weights = {});

/// Floyd-Warshall twin for cross-checks.
std::map<VertexId, std::map<VertexId, Weight>> all_pairs_shortest_paths_floyd(
    const PlaneGraph& g, const std::map<EdgeId, Weight>& weights = {});

}  // namespace planarforge
