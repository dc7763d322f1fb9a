#pragma once

#include "planarforge/plane_graph.hpp"

namespace planarforge {

/// Convenience embedder for small biconnected abstract graphs (<= 64
/// vertices): open-ear insertion with backtracking over the host face per
/// ear. Not on any pipeline's critical path; pipelines require embedded
/// inputs. Throws NotBiconnected / TooSmall / NotPlanarEmbedding.
PlaneGraph embed_biconnected(const std::vector<VertexId>& vertices,
                             const std::map<EdgeId, std::pair<VertexId, VertexId>>& edges);

}  // namespace planarforge
