#include "planarforge/pg_io.hpp"

#include <fstream>
#include <sstream>

namespace planarforge {

PgInstance parse_pg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::map<EdgeId, std::pair<VertexId, VertexId>> edges;
    std::map<VertexId, std::vector<EdgeId>> rotation;
    std::optional<int> outer_index;
    std::set<VertexId> terminals;
    std::map<EdgeId, Weight> weights;

    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string tag;
        if (!(ls >> tag)) continue;
        auto fail = [&](const std::string& msg) -> GraphError {
            return GraphError(Err::ParseError, msg + " at line " + std::to_string(lineno));
        };
        if (tag == "n") {
            if (!(ls >> n) || n < 0) throw fail("bad vertex count");
        } else if (tag == "e") {
            EdgeId e;
            VertexId u, v;
            if (!(ls >> e >> u >> v)) throw fail("bad edge line");
            if (edges.count(e)) throw fail("duplicate edge id");
            edges[e] = {u, v};
        } else if (tag == "r") {
            std::string head;
            if (!(ls >> head)) throw fail("bad rotation line");
            if (head.empty() || head.back() != ':') throw fail("rotation vertex must end in ':'");
            VertexId v;
            try {
                v = std::stoi(head.substr(0, head.size() - 1));
            } catch (...) {
                throw fail("bad rotation vertex");
            }
            if (rotation.count(v)) throw fail("duplicate rotation line");
            std::vector<EdgeId> order;
            EdgeId e;
            while (ls >> e) order.push_back(e);
            rotation[v] = order;
        } else if (tag == "outer") {
            int idx;
            if (!(ls >> idx)) throw fail("bad outer line");
            outer_index = idx;
        } else if (tag == "t") {
            VertexId v;
            while (ls >> v) terminals.insert(v);
        } else if (tag == "w") {
            EdgeId e;
            Weight w;
            if (!(ls >> e >> w)) throw fail("bad weight line");
            weights[e] = w;
        } else {
            throw fail("unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw GraphError(Err::ParseError, "missing 'n' line");

    std::vector<VertexId> vertices;
    for (int v = 0; v < n; ++v) vertices.push_back(v);

    PgInstance inst;
    try {
        inst.graph = PlaneGraph::build(vertices, edges, rotation);
    } catch (const GraphError&) {
        throw;
    }
    if (outer_index) {
        const auto& fs = inst.graph.faces();
        if (*outer_index < 0 || *outer_index >= static_cast<int>(fs.size()))
            throw GraphError(Err::ParseError, "outer face index out of range");
        inst.graph.set_outer(fs[*outer_index].walk.front());
    }
    for (VertexId v : terminals)
        if (!inst.graph.has_vertex(v)) throw GraphError(Err::ParseError, "unknown terminal");
    for (const auto& [e, w] : weights)
        if (!inst.graph.has_edge(e)) throw GraphError(Err::ParseError, "weight for unknown edge");
    inst.terminals = terminals;
    inst.weights = weights;
    return inst;
}

std::string serialize_pg(const PgInstance& inst) {
    const PlaneGraph& g = inst.graph;
    // Canonical form requires contiguous vertex ids 0..n-1.
    std::vector<VertexId> vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        if (vs[i] != static_cast<VertexId>(i))
            throw GraphError(Err::Internal, "serialize_pg requires contiguous vertex ids");
    std::ostringstream out;
    out << "n " << g.num_vertices() << "\n";
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.endpoints(e);
        out << "e " << e << " " << u << " " << v << "\n";
    }
    for (VertexId v : vs) {
        out << "r " << v << ":";
        for (EdgeId e : g.rotation(v)) out << " " << e;
        out << "\n";
    }
    if (auto idx = g.outer_face_index()) out << "outer " << *idx << "\n";
    if (!inst.terminals.empty()) {
        out << "t";
        for (VertexId v : inst.terminals) out << " " << v;
        out << "\n";
    }
    for (const auto& [e, w] : inst.weights) out << "w " << e << " " << w << "\n";
    return out.str();
}

std::string serialize_pg(const PlaneGraph& g) {
    PgInstance inst;
    inst.graph = g;
    return serialize_pg(inst);
}

PgInstance load_pg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError(Err::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pg(buf.str());
}

void save_pg_file(const std::string& path, const PgInstance& inst) {
    std::ofstream out(path);
    if (!out) throw GraphError(Err::ParseError, "cannot write " + path);
    out << serialize_pg(inst);
}

}  // namespace planarforge
