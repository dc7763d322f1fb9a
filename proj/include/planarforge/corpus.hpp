#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planarforge/plane_graph.hpp"

namespace planarforge {

enum class CorpusClass {
    TwoConnCubicPlanar,     // 2-connected cubic planar, min degree 3
    TwoConnPlanarDelta3,    // 2-connected planar, min degree exactly 3
    FourRegularPlanar,      // 4-regular planar (possibly with cut vertices)
    TriangulationDeficient  // 2-connected planar with a face of size >= 4
};

CorpusClass corpus_class_from_name(const std::string& name);
const char* corpus_class_name(CorpusClass c);

/// Deterministic seeded generator; every emitted graph is validated against
/// its class predicate (GenerationFailed after the retry cap). `size_hint`
/// bounds the vertex count loosely from below.
std::vector<PlaneGraph> gen_corpus(CorpusClass cls, std::uint64_t seed, int count,
                                   int size_hint = 14);

/// Class predicate used by the generator's self-check.
bool matches_class(const PlaneGraph& g, CorpusClass cls);

/// Medial graph of a 2-connected plane graph: one vertex per edge, adjacent
/// when consecutive around a face; 4-regular and planar by construction.
PlaneGraph medial_graph(const PlaneGraph& g);

/// 4-regular planar host with one cut vertex: two K5-minus-an-edge blocks
/// sharing the degree-4 vertex.
PlaneGraph four_regular_cutvertex_host();

}  // namespace planarforge
