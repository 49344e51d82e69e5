#include "treequest/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace treequest {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && is_sep(line[i])) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !is_sep(line[i])) {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        fn(++line_no, text.substr(pos, end - pos));
        pos = end + 1;
    }
}

bool blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

void normalize(RawGraph& g, std::vector<Edge> raw) {
    g.stats.raw_edges = raw.size();
    std::vector<Edge> kept;
    kept.reserve(raw.size());
    for (auto [u, v] : raw) {
        if (u == v) {
            ++g.stats.self_loops;
            continue;
        }
        kept.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(kept.begin(), kept.end());
    auto last = std::unique(kept.begin(), kept.end());
    g.stats.duplicate_edges = static_cast<std::size_t>(kept.end() - last);
    kept.erase(last, kept.end());
    g.edges = std::move(kept);
    if (g.vertex_count() == 0) {
        throw InputError("empty graph");
    }
}

RawGraph load_edge_list(std::string_view text) {
    RawGraph g;
    g.format = GraphFormat::EdgeList;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> numeric;
    bool all_numeric = true;
    std::vector<std::pair<std::string, std::string>> named;

    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (blank(line)) {
            return;
        }
        auto first = line.find_first_not_of(" \t");
        if (line[first] == '#' || line[first] == '%') {
            ++g.stats.comment_lines;
            return;
        }
        auto tokens = tokenize(line);
        if (tokens.size() < 2) {
            malformed(line_no, "expected two vertex labels, got '" + std::string(line) + "'");
        }
        ++g.stats.data_lines;
        if (all_numeric) {
            auto a = parse_uint(tokens[0]);
            auto b = parse_uint(tokens[1]);
            if (a && b) {
                numeric.emplace_back(*a, *b);
                return;
            }
            all_numeric = false;
            named.reserve(numeric.size() + 1);
            for (auto [x, y] : numeric) {
                named.emplace_back(std::to_string(x), std::to_string(y));
            }
            numeric.clear();
        }
        named.emplace_back(std::string(tokens[0]), std::string(tokens[1]));
    });

    std::vector<Edge> raw;
    if (all_numeric) {
        std::vector<std::uint64_t> ids;
        ids.reserve(numeric.size() * 2);
        for (auto [a, b] : numeric) {
            ids.push_back(a);
            ids.push_back(b);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        if (ids.size() > kNoVertex) {
            throw InputError("too many vertices");
        }
        auto dense = [&ids](std::uint64_t x) {
            return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
        };
        raw.reserve(numeric.size());
        for (auto [a, b] : numeric) {
            raw.emplace_back(dense(a), dense(b));
        }
        g.labels.reserve(ids.size());
        for (auto x : ids) {
            g.labels.push_back(std::to_string(x));
        }
    } else {
        std::unordered_map<std::string, Vertex> index;
        auto intern = [&](const std::string& label) {
            auto [it, inserted] = index.try_emplace(label, static_cast<Vertex>(g.labels.size()));
            if (inserted) {
                g.labels.push_back(label);
            }
            return it->second;
        };
        raw.reserve(named.size());
        for (const auto& [a, b] : named) {
            Vertex u = intern(a);
            Vertex v = intern(b);
            raw.emplace_back(u, v);
        }
    }
    normalize(g, std::move(raw));
    return g;
}

RawGraph load_matrix_market(std::string_view text) {
    RawGraph g;
    g.format = GraphFormat::MatrixMarket;
    bool header_seen = false;
    bool dims_seen = false;
    std::uint64_t vertices = 0;
    std::vector<Edge> raw;

    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (!header_seen) {
            if (line.rfind("%%MatrixMarket", 0) != 0) {
                malformed(line_no, "missing %%MatrixMarket header");
            }
            header_seen = true;
            ++g.stats.comment_lines;
            return;
        }
        if (blank(line)) {
            return;
        }
        if (line.front() == '%') {
            ++g.stats.comment_lines;
            return;
        }
        auto tokens = tokenize(line);
        if (!dims_seen) {
            if (tokens.size() < 2) {
                malformed(line_no, "expected dimensions line 'rows cols [entries]'");
            }
            auto rows = parse_uint(tokens[0]);
            auto cols = parse_uint(tokens[1]);
            if (!rows || !cols) {
                malformed(line_no, "non-integer dimensions");
            }
            vertices = std::max(*rows, *cols);
            if (vertices > kNoVertex) {
                malformed(line_no, "too many vertices");
            }
            dims_seen = true;
            return;
        }
        if (tokens.size() < 2) {
            malformed(line_no, "expected 'i j [w]'");
        }
        auto i = parse_uint(tokens[0]);
        auto j = parse_uint(tokens[1]);
        if (!i || !j) {
            malformed(line_no, "non-integer vertex id");
        }
        if (*i == 0 || *j == 0 || *i > vertices || *j > vertices) {
            malformed(line_no, "vertex id out of range 1.." + std::to_string(vertices));
        }
        ++g.stats.data_lines;
        raw.emplace_back(static_cast<Vertex>(*i - 1), static_cast<Vertex>(*j - 1));
    });
    if (!header_seen) {
        throw InputError("empty graph");
    }
    if (!dims_seen) {
        throw InputError("matrix market file has no dimensions line");
    }
    g.labels.reserve(vertices);
    for (std::uint64_t v = 1; v <= vertices; ++v) {
        g.labels.push_back(std::to_string(v));
    }
    normalize(g, std::move(raw));
    return g;
}

struct Adjacency {
    std::vector<std::size_t> offsets;
    std::vector<Vertex> targets;

    explicit Adjacency(const RawGraph& g) : offsets(g.vertex_count() + 1, 0) {
        for (auto [u, v] : g.edges) {
            ++offsets[u + 1];
            ++offsets[v + 1];
        }
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            offsets[i + 1] += offsets[i];
        }
        targets.resize(offsets.back());
        std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
        // Edges are sorted by (min, max); filling both directions then sorting
        // each list keeps the ascending-neighbor invariant.
        for (auto [u, v] : g.edges) {
            targets[fill[u]++] = v;
            targets[fill[v]++] = u;
        }
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                      targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
        }
    }

    std::span<const Vertex> operator[](Vertex v) const {
        return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
    std::size_t degree(Vertex v) const { return offsets[v + 1] - offsets[v]; }
};

std::vector<std::uint32_t> bfs(const Adjacency& adj, Vertex source) {
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(adj.offsets.size() - 1, unset);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : adj[v]) {
            if (dist[w] == unset) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "auto") {
        return GraphFormat::Auto;
    }
    if (name == "edge-list" || name == "edgelist") {
        return GraphFormat::EdgeList;
    }
    if (name == "matrix-market" || name == "mtx") {
        return GraphFormat::MatrixMarket;
    }
    throw InputError("unknown graph format '" + std::string(name) + "'");
}

std::string_view to_string(GraphFormat format) {
    switch (format) {
        case GraphFormat::Auto: return "auto";
        case GraphFormat::EdgeList: return "edge-list";
        case GraphFormat::MatrixMarket: return "matrix-market";
    }
    return "unknown";
}

RawGraph load_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::Auto) {
        auto first = text.find_first_not_of(" \t\r\n");
        bool mm = first != std::string_view::npos && text.substr(first).rfind("%%MatrixMarket", 0) == 0;
        format = mm ? GraphFormat::MatrixMarket : GraphFormat::EdgeList;
    }
    return format == GraphFormat::MatrixMarket ? load_matrix_market(text) : load_edge_list(text);
}

RawGraph load_graph_file(const std::filesystem::path& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_graph(buffer.str(), format);
}

RawGraph largest_component(const RawGraph& graph) {
    const std::size_t n = graph.vertex_count();
    if (n == 0) {
        throw InputError("empty graph");
    }
    Adjacency adj(graph);
    std::vector<std::uint32_t> comp(n, std::numeric_limits<std::uint32_t>::max());
    std::vector<std::size_t> sizes;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != std::numeric_limits<std::uint32_t>::max()) {
            continue;
        }
        auto id = static_cast<std::uint32_t>(sizes.size());
        sizes.push_back(0);
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++sizes[id];
            for (Vertex w : adj[v]) {
                if (comp[w] != id) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    // Components are numbered by their smallest vertex, so max_element's
    // first-maximum rule is the tie-break.
    auto best = static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

    RawGraph out;
    out.format = graph.format;
    out.stats = graph.stats;
    std::vector<Vertex> remap(n, kNoVertex);
    for (Vertex v = 0; v < n; ++v) {
        if (comp[v] == best) {
            remap[v] = static_cast<Vertex>(out.labels.size());
            out.labels.push_back(graph.labels[v]);
        }
    }
    for (auto [u, v] : graph.edges) {
        if (comp[u] == best) {
            out.edges.emplace_back(remap[u], remap[v]);
        }
    }
    return out;
}

Vertex peripheral_root(const RawGraph& graph) {
    Adjacency adj(graph);
    auto d0 = bfs(adj, 0);
    Vertex u = 0;
    for (Vertex v = 0; v < d0.size(); ++v) {
        if (d0[v] != std::numeric_limits<std::uint32_t>::max() && d0[v] > d0[u]) {
            u = v;
        }
    }
    auto du = bfs(adj, u);
    std::uint32_t ecc = 0;
    for (auto d : du) {
        if (d != std::numeric_limits<std::uint32_t>::max()) {
            ecc = std::max(ecc, d);
        }
    }
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < du.size(); ++v) {
        if (du[v] == ecc && (best == kNoVertex || adj.degree(v) < adj.degree(best))) {
            best = v;
        }
    }
    return best;
}

Tree dfs_spanning_tree(const RawGraph& graph, std::optional<Vertex> root) {
    const std::size_t n = graph.vertex_count();
    if (n == 0) {
        throw InputError("empty graph");
    }
    Vertex start = root ? *root : peripheral_root(graph);
    if (start >= n) {
        throw InputError("root " + std::to_string(start) + " is not a vertex");
    }
    Adjacency adj(graph);
    std::vector<char> seen(n, 0);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> stack{{start, 0}};
    seen[start] = 1;
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nb = adj[f.v];
        if (f.next == nb.size()) {
            stack.pop_back();
            continue;
        }
        Vertex w = nb[f.next++];
        if (!seen[w]) {
            seen[w] = 1;
            edges.emplace_back(f.v, w);
            stack.push_back({w, 0});
        }
    }
    if (edges.size() != n - 1) {
        throw InputError("graph is disconnected; take the largest component first");
    }
    return Tree::from_edges(n, edges);
}

Tree tree_from_graph(const RawGraph& graph) {
    if (graph.vertex_count() == 0) {
        throw InputError("empty graph");
    }
    if (graph.edges.size() + 1 != graph.vertex_count()) {
        throw InputError("input is not a tree (" + std::to_string(graph.vertex_count()) + " vertices, " +
                         std::to_string(graph.edges.size()) + " edges)");
    }
    return Tree::from_edges(graph.vertex_count(), graph.edges);
}

RawGraph graph_from_tree(const Tree& tree) {
    RawGraph g;
    g.labels.reserve(tree.size());
    for (Vertex v = 0; v < tree.size(); ++v) {
        g.labels.push_back(std::to_string(v));
    }
    g.edges = tree.edges();
    return g;
}

void write_edge_list(std::ostream& out, const RawGraph& graph) {
    for (auto [u, v] : graph.edges) {
        out << graph.labels[u] << ' ' << graph.labels[v] << '\n';
    }
}

void write_edge_list(std::ostream& out, const Tree& tree) {
    for (auto [u, v] : tree.edges()) {
        out << u << ' ' << v << '\n';
    }
}

void write_matrix_market(std::ostream& out, const RawGraph& graph) {
    out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
    out << graph.vertex_count() << ' ' << graph.vertex_count() << ' ' << graph.edges.size() << '\n';
    for (auto [u, v] : graph.edges) {
        out << (v + 1) << ' ' << (u + 1) << '\n';
    }
}

}  // namespace treequest
