#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "planarforge/plane_graph.hpp"

namespace planarforge {

using Weight = std::int64_t;

/// A graph instance as carried by the ".pg" text format: the embedded graph
/// plus optional terminal set and optional edge weights.
struct PgInstance {
    PlaneGraph graph;
    std::set<VertexId> terminals;
    std::map<EdgeId, Weight> weights;  // empty means unweighted

    friend bool operator==(const PgInstance& a, const PgInstance& b) {
        return a.graph == b.graph && a.terminals == b.terminals && a.weights == b.weights;
    }
};

/// Parses the ".pg" text format:
///   n <vertex count>            vertices are ids 0..n-1
///   e <id> <u> <v>              one per edge
///   r <v>: <e1> <e2> ...        clockwise rotation, one per vertex
///   outer <face index>          optional, index into the canonical face list
///   t <v1> <v2> ...             optional terminal set
///   w <edge id> <weight>        optional, one per weighted edge
///   # comment
PgInstance parse_pg(const std::string& text);

/// Canonical serialization; parse(serialize(x)) == x and
/// serialize(parse(serialize(x))) is byte-identical.
std::string serialize_pg(const PgInstance& inst);

std::string serialize_pg(const PlaneGraph& g);

PgInstance load_pg_file(const std::string& path);
void save_pg_file(const std::string& path, const PgInstance& inst);

}  // namespace planarforge
