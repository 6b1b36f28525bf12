#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "indgap/graph.hpp"

#include <sstream>

using namespace indgap;

TEST_CASE("generators have the expected shape") {
    Graph p = make_path(5);
    CHECK(p.n == 5);
    CHECK(p.edge_count() == 4);
    CHECK(p.degree(0) == 1);
    CHECK(p.degree(2) == 2);

    Graph c = make_cycle(6);
    CHECK(c.edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(c.degree(v) == 2);

    Graph s = make_star(4);
    CHECK(s.n == 5);
    CHECK(s.degree(0) == 4);
    CHECK(s.degree(3) == 1);

    Graph kb = make_complete_bipartite(3, 4);
    CHECK(kb.n == 7);
    CHECK(kb.edge_count() == 12);
    CHECK(!kb.has_edge(0, 1));
    CHECK(kb.has_edge(0, 3));
}

TEST_CASE("connectivity and metric") {
    CHECK(is_connected(make_path(7)));
    CHECK(diameter(make_path(7)) == 6);
    CHECK(diameter(make_cycle(8)) == 4);
    CHECK(diameter(make_cycle(7)) == 3);
    CHECK(diameter(make_star(5)) == 2);
    CHECK(diameter(make_complete(4)) == 1);
    CHECK(diameter(make_complete_bipartite(3, 3)) == 2);
    CHECK(diameter(make_path(1)) == 0);

    Graph two(2);
    CHECK(!is_connected(two));
    CHECK(components(two, full_mask(2)).size() == 2);

    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    auto comps = components(g, full_mask(6));
    CHECK(comps.size() == 3);
}

TEST_CASE("gnp is deterministic in the seed") {
    Graph a = make_gnp(10, 0.4, 42);
    Graph b = make_gnp(10, 0.4, 42);
    Graph c = make_gnp(10, 0.4, 43);
    CHECK(a.adj == b.adj);
    CHECK(a.adj != c.adj); // would be astronomically unlucky otherwise
}

TEST_CASE("spec string parsing") {
    CHECK(parse_graph_spec("path:7").n == 7);
    CHECK(parse_graph_spec("cycle:12").edge_count() == 12);
    CHECK(parse_graph_spec("star:5").n == 6);
    CHECK(parse_graph_spec("kbip:4x4").edge_count() == 16);
    CHECK(parse_graph_spec("complete:6").edge_count() == 15);
    Graph g = parse_graph_spec("gnp:10:0.4:seed42");
    CHECK(g.n == 10);
    CHECK(g.adj == make_gnp(10, 0.4, 42).adj);

    CHECK_THROWS_AS(parse_graph_spec("blob:3"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("path:x"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("kbip:4:4"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("gnp:10:0.4:42"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("gnp:10:1.4:seed42"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("cycle:2"), ParseError);
}

TEST_CASE("edge list round trip and validation") {
    std::istringstream in(
        "# a comment\n"
        "4 3   # header\n"
        "0 1\n"
        "\n"
        "1 2\n"
        "2 3\n");
    Graph g = read_edge_list(in, "t");
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 2));

    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream back(out.str());
    Graph h = read_edge_list(back, "t2");
    CHECK(h.adj == g.adj);

    auto fails = [](const char* text) {
        std::istringstream bad(text);
        CHECK_THROWS_AS(read_edge_list(bad, "bad"), ParseError);
    };
    fails("");                      // no header
    fails("3\n0 1\n");              // missing edge count
    fails("3 2\n0 1\n");            // too few edges
    fails("3 1\n0 4\n");            // vertex out of range
    fails("3 1\n1 1\n");            // self loop
    fails("3 1\n0 1\n0 2\n");       // trailing data
    fails("3 1\n0 1 2\n");          // trailing tokens on edge
}

TEST_CASE("canonical code separates and identifies") {
    // Same graph under relabeling.
    Graph a(4);
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    a.add_edge(2, 3);
    Graph b(4);
    b.add_edge(2, 0);
    b.add_edge(0, 3);
    b.add_edge(3, 1);
    CHECK(canonical_code(a) == canonical_code(b));

    // Path vs star: same vertex and edge counts, different graphs.
    CHECK(canonical_code(make_path(4)) != canonical_code(make_star(3)));
}

TEST_CASE("enumeration counts match the published census") {
    // all graphs: 1, 2, 4, 11, 34, 156, 1044; connected: 1, 1, 2, 6, 21, 112, 853
    const long all[] = {1, 2, 4, 11, 34, 156, 1044};
    const long conn[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        if (n <= 6) CHECK(enumerate_graphs(n, false).size() == size_t(all[n - 1]));
        CHECK(enumerate_graphs(n, true).size() == size_t(conn[n - 1]));
    }
    for (const Graph& g : enumerate_graphs(5, true)) CHECK(is_connected(g));
}

TEST_CASE("induced subgraph re-indexes ascending and keeps edges") {
    // Dropping the middle of a path leaves an edge plus an isolated vertex.
    Graph p4 = make_path(4);
    Graph h = delete_vertices(p4, bit(1));
    CHECK(h.n == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(1, 2)); // old vertices 2,3
    CHECK(h.degree(0) == 0);

    // Deleting a closed neighborhood in C_4 leaves a single vertex.
    Graph c4 = make_cycle(4);
    Graph k1 = delete_vertices(c4, c4.closed_nbhd(0));
    CHECK(k1.n == 1);
    CHECK(k1.edge_count() == 0);

    CHECK(delete_vertices(p4, full_mask(4)).n == 0);

    // Keeping everything is the identity.
    Graph same = induced_subgraph(p4, full_mask(4));
    CHECK(same.n == p4.n);
    CHECK(same.adj == p4.adj);
}

TEST_CASE("diameter is at most n-1 with equality only for paths") {
    for (int n = 2; n <= 8; ++n) {
        auto path_code = canonical_code(make_path(n));
        for (const Graph& g : enumerate_graphs(n, true)) {
            int d = diameter(g);
            CHECK(d <= n - 1);
            if (d == n - 1) CHECK(canonical_code(g) == path_code);
        }
    }
}
