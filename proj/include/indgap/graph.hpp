#pragma once

// Simple undirected graphs on up to 64 vertices, stored as per-vertex
// adjacency bitmasks so that induced-subgraph work is mask arithmetic.

#include "indgap/errors.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace indgap {

constexpr int kMaxVertices = 64;

struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::string label;

    Graph() = default;
    explicit Graph(int nv, std::string lbl = "");

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const;
    int max_degree() const;
    int edge_count() const;
    std::uint64_t closed_nbhd(int v) const { return adj[v] | (std::uint64_t(1) << v); }
};

inline std::uint64_t bit(int v) { return std::uint64_t(1) << v; }
std::uint64_t full_mask(int n);

// Induced subgraph on the kept vertices, re-indexed contiguously in
// ascending original order. delete_vertices drops the given set instead.
Graph induced_subgraph(const Graph& g, std::uint64_t keep);
Graph delete_vertices(const Graph& g, std::uint64_t drop);

// Connectivity and metric helpers all operate on an induced vertex subset.
std::uint64_t component_of(const Graph& g, std::uint64_t mask, int start);
std::vector<std::uint64_t> components(const Graph& g, std::uint64_t mask);
bool is_connected(const Graph& g);
int eccentricity(const Graph& g, int v);
int diameter(const Graph& g); // longest shortest path; requires connected
int center_vertex(const Graph& g); // smallest eccentricity, ties to low index

// Constructors for the named families.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int leaves);        // leaves + one center, center has index 0
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_gnp(int n, double p, std::uint64_t seed);

// "path:7", "cycle:12", "star:5", "kbip:4x4", "complete:6", "gnp:10:0.4:seed42"
Graph parse_graph_spec(const std::string& spec);

// Edge-list format: optional '#' comment lines, then "n m", then m lines "u v".
Graph read_edge_list(std::istream& in, const std::string& name = "<stream>");
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Isomorphism-distinct enumeration (exactly n vertices). Canonical form is a
// lexicographically maximal adjacency code found by pruned backtracking.
std::vector<std::uint32_t> canonical_code(const Graph& g);
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

} // namespace indgap
