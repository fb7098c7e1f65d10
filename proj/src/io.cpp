#include "antimagic/io.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace antimagic {

namespace {

using ordered_json = nlohmann::ordered_json;

struct EdgeListBuilder {
    std::vector<std::string> names;
    std::map<std::string, Vertex> index;
    std::vector<Edge> edges;

    Vertex intern(const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        Vertex id = static_cast<Vertex>(names.size());
        names.push_back(name);
        index.emplace(name, id);
        return id;
    }

    // Validates tree-ness with named diagnostics before handing off to the
    // Tree constructor.
    NamedTree finish() {
        const int n = static_cast<int>(names.size());
        if (n == 0) throw parse_error("input contains no vertices");
        if (static_cast<int>(edges.size()) >= n) {
            // n-1 < |E| on n vertices forces a cycle; find one endpoint on it.
            throw parse_error("input is not a tree: " + std::to_string(edges.size()) +
                              " edges on " + std::to_string(n) +
                              " vertices implies a cycle (near '" +
                              names[edges.back().a] + "')");
        }
        if (static_cast<int>(edges.size()) < n - 1) {
            // Too few edges: some vertex is cut off from the first one.
            std::vector<char> seen(n, 0);
            std::vector<std::vector<Vertex>> adj(n);
            for (const Edge& e : edges) {
                adj[e.a].push_back(e.b);
                adj[e.b].push_back(e.a);
            }
            std::vector<Vertex> stack{0};
            seen[0] = 1;
            while (!stack.empty()) {
                Vertex u = stack.back();
                stack.pop_back();
                for (Vertex v : adj[u]) {
                    if (!seen[v]) {
                        seen[v] = 1;
                        stack.push_back(v);
                    }
                }
            }
            for (Vertex u = 0; u < n; ++u) {
                if (!seen[u]) {
                    throw parse_error("input is disconnected: '" + names[u] +
                                      "' is not reachable from '" + names[0] + "'");
                }
            }
        }
        try {
            return {Tree(n, edges), names};
        } catch (const std::invalid_argument& e) {
            throw parse_error(std::string("input is not a tree: ") + e.what());
        }
    }
};

NamedTree parse_edge_list(const std::string& text) {
    EdgeListBuilder builder;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue;  // blank line
        if (!(fields >> b)) {
            throw parse_error("line " + std::to_string(line_no) + ": expected two vertex names");
        }
        if (fields >> extra) {
            throw parse_error("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
        }
        if (a == b) {
            throw parse_error("line " + std::to_string(line_no) + ": loop at '" + a + "'");
        }
        builder.edges.push_back({builder.intern(a), builder.intern(b)});
    }
    return builder.finish();
}

NamedTree parse_json_tree(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    EdgeListBuilder builder;
    if (doc.contains("vertices")) {
        for (const auto& v : doc.at("vertices")) {
            builder.intern(v.get<std::string>());
        }
    }
    if (!doc.contains("edges")) throw parse_error("JSON document lacks an \"edges\" array");
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw parse_error("each edge must be a two-element array");
        }
        std::string a = e[0].is_string() ? e[0].get<std::string>() : e[0].dump();
        std::string b = e[1].is_string() ? e[1].get<std::string>() : e[1].dump();
        if (a == b) throw parse_error("loop at '" + a + "'");
        builder.edges.push_back({builder.intern(a), builder.intern(b)});
    }
    return builder.finish();
}

const std::string& name_of(const std::vector<std::string>& names, Vertex u) {
    return names.at(static_cast<size_t>(u));
}

}  // namespace

NamedTree parse_tree(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_json_tree(text);
    }
    return parse_edge_list(text);
}

std::vector<std::string> index_names(int vertex_count) {
    std::vector<std::string> names(vertex_count);
    for (int i = 0; i < vertex_count; ++i) names[i] = std::to_string(i);
    return names;
}

std::string emit_labeling(const OrientedLabeling& d, const std::vector<std::string>& names,
                          const AntimagicReport& report) {
    ordered_json doc;
    doc["vertex_count"] = d.vertex_count;
    doc["edge_count"] = d.edge_count();
    ordered_json vertices = ordered_json::array();
    for (Vertex u = 0; u < d.vertex_count; ++u) vertices.push_back(name_of(names, u));
    doc["vertices"] = std::move(vertices);

    ordered_json arcs = ordered_json::array();
    for (const Arc& arc : d.arcs) {
        ordered_json entry;
        entry["tail"] = name_of(names, arc.tail);
        entry["head"] = name_of(names, arc.head);
        entry["label"] = arc.label;
        arcs.push_back(std::move(entry));
    }
    doc["arcs"] = std::move(arcs);

    ordered_json sums;
    VertexSums s = vertex_sums(d);
    for (Vertex u = 0; u < d.vertex_count; ++u) sums[name_of(names, u)] = s[u];
    doc["vertex_sums"] = std::move(sums);

    ordered_json verdicts;
    verdicts["bijective"] = report.bijective;
    verdicts["antimagic"] = report.antimagic();
    ordered_json collisions = ordered_json::array();
    for (const Collision& c : report.collisions) {
        ordered_json entry;
        entry["u"] = name_of(names, c.u);
        entry["v"] = name_of(names, c.v);
        entry["sum"] = c.sum;
        collisions.push_back(std::move(entry));
    }
    verdicts["collisions"] = std::move(collisions);
    doc["verdicts"] = std::move(verdicts);

    return doc.dump(2) + "\n";
}

ParsedLabeling parse_labeling(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    ParsedLabeling out;
    try {
        out.names = doc.at("vertices").get<std::vector<std::string>>();
        out.labeling.vertex_count = static_cast<int>(out.names.size());
        std::map<std::string, Vertex> index;
        for (Vertex u = 0; u < out.labeling.vertex_count; ++u) index[out.names[u]] = u;
        for (const auto& entry : doc.at("arcs")) {
            Arc arc;
            arc.tail = index.at(entry.at("tail").get<std::string>());
            arc.head = index.at(entry.at("head").get<std::string>());
            arc.label = entry.at("label").get<int>();
            out.labeling.arcs.push_back(arc);
        }
    } catch (const ordered_json::exception& e) {
        throw parse_error(std::string("malformed labeling document: ") + e.what());
    } catch (const std::out_of_range&) {
        throw parse_error("labeling document references an unknown vertex");
    }
    return out;
}

std::string emit_dot(const OrientedLabeling& d, const std::vector<std::string>& names) {
    std::ostringstream out;
    VertexSums sums = vertex_sums(d);
    out << "digraph antimagic {\n";
    for (Vertex u = 0; u < d.vertex_count; ++u) {
        out << "  \"" << name_of(names, u) << "\" [label=\"" << name_of(names, u)
            << "\\ns=" << sums[u] << "\"];\n";
    }
    for (const Arc& arc : d.arcs) {
        out << "  \"" << name_of(names, arc.tail) << "\" -> \"" << name_of(names, arc.head)
            << "\" [label=\"" << arc.label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_arc_lines(const OrientedLabeling& d) {
    std::ostringstream out;
    out << "vertices " << d.vertex_count << "\n";
    for (const Arc& arc : d.arcs) {
        out << "arc " << arc.tail << " " << arc.head << " " << arc.label << "\n";
    }
    return out.str();
}

}  // namespace antimagic
