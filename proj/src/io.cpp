#include "cherrylab/io.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace cherrylab {

namespace {

// content lines with comments stripped, blank lines skipped
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.push_back(line);
    }
    return out;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

}  // namespace

Hypergraph3 parse_hypergraph(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("empty input, expected h3 header");
    auto head = tokens(lines[0]);
    if (head.size() != 3 || head[0] != "h3")
        throw ParseError("malformed header, expected 'h3 <n> <m>'");
    int n = parse_int(head[1], "vertex count");
    int m = parse_int(head[2], "edge count");
    if (n < 0 || m < 0) throw ParseError("negative count in header");
    if (static_cast<int>(lines.size()) - 1 != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) +
                         ", found " + std::to_string(lines.size() - 1));
    std::vector<Triple> edges;
    edges.reserve(m);
    for (int i = 1; i <= m; ++i) {
        auto ts = tokens(lines[i]);
        if (ts.size() != 3) throw ParseError("edge line must have 3 vertices: '" + lines[i] + "'");
        edges.push_back({parse_int(ts[0], "vertex"), parse_int(ts[1], "vertex"),
                         parse_int(ts[2], "vertex")});
    }
    try {
        return make_hypergraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Hypergraph3 parse_hypergraph(const std::string& text) {
    std::istringstream is(text);
    return parse_hypergraph(is);
}

std::string serialize(const Hypergraph3& h) {
    std::ostringstream os;
    os << "h3 " << h.n << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges) os << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
    return os.str();
}

ColouredGraph parse_coloured_graph(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("empty input, expected cg header");
    auto head = tokens(lines[0]);
    if (head.size() != 2 || head[0] != "cg")
        throw ParseError("malformed header, expected 'cg <n>'");
    int n = parse_int(head[1], "vertex count");
    if (n < 0) throw ParseError("negative vertex count");
    std::size_t want = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (n == 0) want = 0;
    if (lines.size() - 1 != want)
        throw ParseError("expected " + std::to_string(want) + " pair lines, found " +
                         std::to_string(lines.size() - 1));
    ColouredGraph g = ColouredGraph::all_blue(n);
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto ts = tokens(lines[i]);
        if (ts.size() < 3) throw ParseError("malformed pair line: '" + lines[i] + "'");
        int u = parse_int(ts[0], "vertex");
        int v = parse_int(ts[1], "vertex");
        if (u == v) throw ParseError("self-pair '" + lines[i] + "'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex out of range in '" + lines[i] + "'");
        int lo = u < v ? u : v, hi = u < v ? v : u;
        std::size_t key = static_cast<std::size_t>(lo) * n + hi;
        if (seen[key]) throw ParseError("duplicate pair in '" + lines[i] + "'");
        seen[key] = true;
        if (ts[2] == "blue") {
            if (ts.size() != 3) throw ParseError("trailing tokens in '" + lines[i] + "'");
            g.set_blue(u, v);
        } else if (ts[2] == "red") {
            if (ts.size() != 4) throw ParseError("red pair needs a 'from' vertex: '" + lines[i] + "'");
            int from = parse_int(ts[3], "from vertex");
            if (from != u && from != v)
                throw ParseError("'from' must be an endpoint in '" + lines[i] + "'");
            g.set_red(from, from == u ? v : u);
        } else {
            throw ParseError("unknown colour '" + ts[2] + "'");
        }
    }
    // every pair appeared exactly once (count matched and no duplicates)
    return g;
}

ColouredGraph parse_coloured_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_coloured_graph(is);
}

std::string serialize(const ColouredGraph& g) {
    std::ostringstream os;
    os << "cg " << g.n << '\n';
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            os << u << ' ' << v << ' ';
            if (g.is_blue(u, v)) os << "blue";
            else os << "red " << (g.red_from(u, v) ? u : v);
            os << '\n';
        }
    return os.str();
}

}
