#include "detour/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "detour/errors.hpp"

namespace detour {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
    throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

struct Line {
    int number;
    std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back({number, raw});
    }
    return lines;
}

Graph parse_native(const std::vector<Line>& lines, const std::string& source) {
    std::istringstream header(lines[0].text);
    long long n = -1, m = -1;
    std::string mode, extra;
    if (!(header >> n >> m >> mode) || (header >> extra))
        fail(source, lines[0].number, "expected header 'n m directed|undirected'");
    if (mode != "directed" && mode != "undirected")
        fail(source, lines[0].number, "unknown mode '" + mode + "'");
    if (n < 0 || m < 0) fail(source, lines[0].number, "negative n or m");
    if (static_cast<long long>(lines.size()) - 1 != m)
        fail(source, lines.back().number,
             "expected " + std::to_string(m) + " edge lines, found " +
                 std::to_string(lines.size() - 1));
    EdgeList edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i].text);
        long long u, v;
        if (!(row >> u >> v) || (row >> extra))
            fail(source, lines[i].number, "expected 'u v'");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    try {
        return mode == "directed" ? Graph::directed(static_cast<int>(n), edges)
                                  : Graph::undirected(static_cast<int>(n), edges);
    } catch (const InputError& e) {
        // Re-run edge insertion to locate the offending line.
        EdgeList prefix;
        for (size_t i = 1; i < lines.size(); ++i) {
            prefix.push_back(edges[i - 1]);
            try {
                if (mode == "directed")
                    Graph::directed(static_cast<int>(n), prefix);
                else
                    Graph::undirected(static_cast<int>(n), prefix);
            } catch (const InputError&) {
                fail(source, lines[i].number, e.what());
            }
        }
        throw;
    }
}

Graph parse_dimacs(const std::vector<Line>& lines, const std::string& source) {
    long long n = -1, m = -1;
    EdgeList edges;
    std::vector<int> edge_lines;
    for (const Line& line : lines) {
        std::istringstream row(line.text);
        std::string tag;
        row >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            std::string extra;
            if (!(row >> kind >> n >> m) || (row >> extra) || kind != "edge")
                fail(source, line.number, "expected 'p edge n m'");
            continue;
        }
        if (tag == "e") {
            if (n < 0) fail(source, line.number, "'e' line before 'p edge' line");
            long long u, v;
            std::string extra;
            if (!(row >> u >> v) || (row >> extra))
                fail(source, line.number, "expected 'e u v'");
            if (u < 1 || u > n || v < 1 || v > n)
                fail(source, line.number, "DIMACS vertex id out of range (1-based)");
            edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
            edge_lines.push_back(line.number);
            continue;
        }
        fail(source, line.number, "unknown DIMACS line tag '" + tag + "'");
    }
    if (n < 0) fail(source, lines.back().number, "missing 'p edge' line");
    if (static_cast<long long>(edges.size()) != m)
        fail(source, lines.back().number,
             "expected " + std::to_string(m) + " edges, found " +
                 std::to_string(edges.size()));
    try {
        return Graph::undirected(static_cast<int>(n), edges);
    } catch (const InputError& e) {
        EdgeList prefix;
        for (size_t i = 0; i < edges.size(); ++i) {
            prefix.push_back(edges[i]);
            try {
                Graph::undirected(static_cast<int>(n), prefix);
            } catch (const InputError&) {
                fail(source, edge_lines[i], e.what());
            }
        }
        throw;
    }
}

} // namespace

Graph parse_graph(std::istream& in, const std::string& source_name) {
    auto lines = read_lines(in);
    if (lines.empty()) throw InputError(source_name + ": empty graph file");
    std::istringstream first(lines[0].text);
    std::string tag;
    first >> tag;
    if (tag == "c" || tag == "p" || tag == "e")
        return parse_dimacs(lines, source_name);
    return parse_native(lines, source_name);
}

Graph parse_graph_string(const std::string& text, const std::string& source_name) {
    std::istringstream in(text);
    return parse_graph(in, source_name);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    return parse_graph(in, path);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << ' '
        << (g.is_directed() ? "directed" : "undirected") << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace detour
