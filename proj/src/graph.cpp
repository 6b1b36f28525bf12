#include "indgap/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace indgap {

Graph::Graph(int nv, std::string lbl) : n(nv), adj(nv, 0), label(std::move(lbl)) {
    if (nv < 0) throw ParseError("vertex count out of range: " + std::to_string(nv));
    if (nv > kMaxVertices)
        throw LimitError("vertex cap is " + std::to_string(kMaxVertices) + ", got " +
                         std::to_string(nv));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("vertex index out of range: " + std::to_string(u) + " " +
                         std::to_string(v));
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    adj[u] |= bit(v);
    adj[v] |= bit(u);
}

int Graph::degree(int v) const { return std::popcount(adj[v]); }

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_count() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
}

std::uint64_t full_mask(int n) {
    return n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep) {
    keep &= full_mask(g.n);
    Graph out(std::popcount(keep), g.label.empty() ? "" : g.label + ":sub");
    std::vector<int> newidx(g.n, -1);
    int k = 0;
    for (int v = 0; v < g.n; ++v)
        if (keep & bit(v)) newidx[v] = k++;
    for (int v = 0; v < g.n; ++v) {
        if (!(keep & bit(v))) continue;
        for (std::uint64_t m = g.adj[v] & keep; m; m &= m - 1)
            out.adj[newidx[v]] |= bit(newidx[std::countr_zero(m)]);
    }
    return out;
}

Graph delete_vertices(const Graph& g, std::uint64_t drop) {
    return induced_subgraph(g, full_mask(g.n) & ~drop);
}

std::uint64_t component_of(const Graph& g, std::uint64_t mask, int start) {
    std::uint64_t comp = bit(start) & mask;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= g.adj[std::countr_zero(m)];
        next &= mask & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::vector<std::uint64_t> components(const Graph& g, std::uint64_t mask) {
    std::vector<std::uint64_t> out;
    while (mask) {
        std::uint64_t c = component_of(g, mask, std::countr_zero(mask));
        out.push_back(c);
        mask &= ~c;
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    return component_of(g, full_mask(g.n), 0) == full_mask(g.n);
}

int eccentricity(const Graph& g, int v) {
    std::uint64_t seen = bit(v);
    std::uint64_t frontier = seen;
    int dist = 0;
    while (true) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= g.adj[std::countr_zero(m)];
        next &= ~seen;
        if (!next) break;
        seen |= next;
        frontier = next;
        ++dist;
    }
    if (seen != full_mask(g.n))
        throw std::invalid_argument("eccentricity on disconnected graph");
    return dist;
}

int diameter(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n; ++v) d = std::max(d, eccentricity(g, v));
    return d;
}

int center_vertex(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("center_vertex: empty graph");
    int best = 0;
    int best_ecc = eccentricity(g, 0);
    for (int v = 1; v < g.n; ++v) {
        int e = eccentricity(g, v);
        if (e < best_ecc) {
            best = v;
            best_ecc = e;
        }
    }
    return best;
}

Graph make_path(int n) {
    Graph g(n, "path:" + std::to_string(n));
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw ParseError("cycle needs at least 3 vertices");
    Graph g(n, "cycle:" + std::to_string(n));
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_star(int leaves) {
    Graph g(leaves + 1, "star:" + std::to_string(leaves));
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph make_complete(int n) {
    Graph g(n, "complete:" + std::to_string(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_complete_bipartite(int a, int b) {
    Graph g(a + b, "kbip:" + std::to_string(a) + "x" + std::to_string(b));
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw ParseError("edge probability must lie in [0,1]");
    std::ostringstream lbl;
    lbl << "gnp:" << n << ":" << p << ":seed" << seed;
    Graph g(n, lbl.str());
    std::mt19937_64 rng(seed);
    // Portable uniform in [0,1): top 53 bits of the generator output.
    auto unit = [&rng]() { return double(rng() >> 11) * 0x1p-53; };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit() < p) g.add_edge(u, v);
    return g;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad " + what + ": '" + s + "'");
    }
}

} // namespace

Graph parse_graph_spec(const std::string& spec) {
    auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    if (kind == "path" && parts.size() == 2)
        return make_path(parse_int(parts[1], "path length"));
    if (kind == "cycle" && parts.size() == 2)
        return make_cycle(parse_int(parts[1], "cycle length"));
    if (kind == "star" && parts.size() == 2)
        return make_star(parse_int(parts[1], "leaf count"));
    if (kind == "complete" && parts.size() == 2)
        return make_complete(parse_int(parts[1], "vertex count"));
    if (kind == "kbip" && parts.size() == 2) {
        auto sides = split(parts[1], 'x');
        if (sides.size() != 2) throw ParseError("kbip wants AxB, got '" + parts[1] + "'");
        return make_complete_bipartite(parse_int(sides[0], "side size"),
                                       parse_int(sides[1], "side size"));
    }
    if (kind == "gnp" && parts.size() == 4) {
        int n = parse_int(parts[1], "vertex count");
        double p;
        try {
            size_t pos = 0;
            p = std::stod(parts[2], &pos);
            if (pos != parts[2].size()) throw std::invalid_argument(parts[2]);
        } catch (const std::exception&) {
            throw ParseError("bad edge probability: '" + parts[2] + "'");
        }
        if (parts[3].rfind("seed", 0) != 0)
            throw ParseError("gnp seed token must look like seed42, got '" + parts[3] + "'");
        return make_gnp(n, p, std::stoull(parts[3].substr(4)));
    }
    throw ParseError("unrecognized graph spec: '" + spec + "'");
}

Graph read_edge_list(std::istream& in, const std::string& name) {
    std::string line;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header)) throw ParseError(name + ": missing 'n m' header");
    std::istringstream hs(header);
    int n, m;
    if (!(hs >> n >> m)) throw ParseError(name + ": malformed header '" + header + "'");
    std::string extra;
    if (hs >> extra) throw ParseError(name + ": trailing tokens in header");
    if (m < 0) throw ParseError(name + ": negative edge count");

    Graph g(n);
    g.label = name;
    for (int i = 0; i < m; ++i) {
        std::string row;
        if (!next_data_line(row))
            throw ParseError(name + ": expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream rs(row);
        int u, v;
        if (!(rs >> u >> v)) throw ParseError(name + ": malformed edge line '" + row + "'");
        if (rs >> extra) throw ParseError(name + ": trailing tokens on edge line");
        g.add_edge(u, v);
    }
    std::string tail;
    if (next_data_line(tail)) throw ParseError(name + ": unexpected data after edge list");
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open graph file: " + path);
    return read_edge_list(f, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) out << u << " " << v << "\n";
}

namespace {

// Backtracking search for the permutation maximizing the adjacency code.
// code[i] = bits of adjacency between perm[i] and perm[0..i-1], compared
// lexicographically row by row.
struct Canonicalizer {
    const Graph& g;
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> rows;
    std::vector<int> perm;
    std::uint64_t used = 0;
    bool have_best = false;
    long generation = 0;

    explicit Canonicalizer(const Graph& gr) : g(gr) {
        rows.resize(g.n);
        perm.resize(g.n);
    }

    std::uint32_t row_for(int v, int depth) const {
        std::uint32_t r = 0;
        for (int j = 0; j < depth; ++j)
            r = (r << 1) | ((g.adj[v] >> perm[j]) & 1u);
        return r;
    }

    // tied == true while rows[0..depth-1] equals best[0..depth-1]. A leaf is
    // only ever reached with rows >= best, so it may overwrite unconditionally.
    void descend(int depth, bool tied) {
        if (depth == g.n) {
            best = rows;
            have_best = true;
            ++generation;
            return;
        }
        // Candidates sorted by row value, high to low.
        std::vector<std::pair<std::uint32_t, int>> cand;
        for (int v = 0; v < g.n; ++v)
            if (!(used & bit(v))) cand.emplace_back(row_for(v, depth), v);
        std::sort(cand.begin(), cand.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        for (auto& [row, v] : cand) {
            bool t;
            if (!have_best) {
                t = true;
            } else if (tied) {
                if (row < best[depth]) return; // remaining rows are smaller too
                t = (row == best[depth]);
            } else {
                t = false; // prefix is strictly greater; any completion wins
            }
            rows[depth] = row;
            perm[depth] = v;
            used |= bit(v);
            long mark = generation;
            descend(depth + 1, t);
            used &= ~bit(v);
            // If the subtree improved best, the new best runs through our
            // prefix, so later siblings compare against it as equals.
            if (generation != mark) tied = true;
        }
    }
};

} // namespace

std::vector<std::uint32_t> canonical_code(const Graph& g) {
    if (g.n > 32) throw std::invalid_argument("canonical_code supports n <= 32");
    Canonicalizer c(g);
    c.descend(0, true);
    return c.best;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("enumeration supported for 1 <= n <= 10");
    // Grow one vertex at a time. Every connected graph has a vertex whose
    // removal keeps it connected (a spanning-tree leaf), so attaching the new
    // vertex by a nonempty neighbor subset reaches everything; for the
    // unrestricted census the empty subset is allowed as well.
    std::vector<Graph> level;
    level.push_back(Graph(1, ""));
    for (int k = 2; k <= n; ++k) {
        std::map<std::vector<std::uint32_t>, Graph> seen;
        for (const Graph& base : level) {
            std::uint64_t subsets = full_mask(k - 1);
            for (std::uint64_t s = connected_only ? 1 : 0; s <= subsets; ++s) {
                Graph g(k);
                for (int u = 0; u + 1 < k; ++u) g.adj[u] = base.adj[u];
                for (std::uint64_t m = s; m; m &= m - 1)
                    g.add_edge(k - 1, std::countr_zero(m));
                if (connected_only && !is_connected(g)) continue;
                auto code = canonical_code(g);
                seen.emplace(std::move(code), std::move(g));
            }
        }
        level.clear();
        for (auto& [code, g] : seen) level.push_back(std::move(g));
    }
    if (connected_only && n >= 2) {
        std::vector<Graph> conn;
        for (auto& g : level)
            if (is_connected(g)) conn.push_back(std::move(g));
        level = std::move(conn);
    }
    int idx = 0;
    for (auto& g : level) g.label = "enum:" + std::to_string(n) + ":" + std::to_string(idx++);
    return level;
}

} // namespace indgap
