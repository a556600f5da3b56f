#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "wes/error.hpp"
#include "wes/generators.hpp"
#include "wes/graph.hpp"
#include "wes/rng.hpp"

using namespace wes;

namespace {

Graph load_str(const std::string& text, const LoadOptions& opts = {}) {
    std::istringstream in(text);
    return load_edge_list(in, opts);
}

std::set<std::pair<std::int64_t, std::int64_t>> labeled_edge_set(const Graph& g) {
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (const Edge& e : g.edges()) {
        std::int64_t a = g.label(e.u), b = g.label(e.v);
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("from_edges: canonical storage and adjacency bookkeeping") {
    Graph g = Graph::from_edges(4, {{1, 0}, {1, 2}, {3, 2}});
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(0).u == 0); // canonicalized to u < v
    CHECK(g.edge(0).v == 1);

    // every edge appears exactly once in each endpoint's adjacency
    std::size_t adj_total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::size_t hits_per_edge[3] = {};
        for (const AdjEntry& a : g.neighbors(v)) {
            ++hits_per_edge[a.edge];
            const Edge& e = g.edge(a.edge);
            CHECK(((e.u == v && e.v == a.neighbor) || (e.v == v && e.u == a.neighbor)));
        }
        for (EdgeId id = 0; id < 3; ++id) {
            const Edge& e = g.edge(id);
            CHECK(hits_per_edge[id] == ((e.u == v || e.v == v) ? 1u : 0u));
        }
        adj_total += g.neighbors(v).size();
        CHECK(g.degree(v) == g.neighbors(v).size());
    }
    CHECK(adj_total == 2 * g.edge_count());
}

TEST_CASE("from_edges: rejects self-loops, duplicates, out-of-range") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}}, {7}), std::invalid_argument);
}

TEST_CASE("load: comments, duplicates, id interning") {
    Graph g = load_str("% meta\n1 2\n2 1\n2 3\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(labeled_edge_set(g) ==
          std::set<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {2, 3}});
    CHECK(g.has_labels());
    CHECK(g.label(0) == 1); // first-appearance interning
    CHECK(g.label(1) == 2);
    CHECK(g.label(2) == 3);
}

TEST_CASE("load: self-loops dropped by default, rejected when configured") {
    Graph g = load_str("5 5\n5 6\n");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);

    LoadOptions strict;
    strict.drop_self_loops = false;
    CHECK_THROWS_AS(load_str("5 5\n5 6\n", strict), ParseError);
}

TEST_CASE("load: CRLF, tabs, extra columns, hash comments, blank lines") {
    Graph g = load_str("# SNAP header\r\n\r\n10\t20\t1234567\r\n20 30 999 x\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);

    LoadOptions strict;
    strict.ignore_extra_columns = false;
    CHECK_THROWS_AS(load_str("1 2 3\n", strict), ParseError);
}

TEST_CASE("load: negative external ids are valid labels") {
    Graph g = load_str("-5 7\n7 0\n");
    CHECK(g.node_count() == 3);
    CHECK(g.label(0) == -5);
}

TEST_CASE("load: malformed line reports its line number") {
    try {
        load_str("1 2\n3 x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    try {
        load_str("# c\n\n1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("load: empty input and comment-only input are data errors") {
    CHECK_THROWS_AS(load_str(""), DataError);
    CHECK_THROWS_AS(load_str("# nothing\n% here\n"), DataError);
}

TEST_CASE("load: line permutation yields the same canonical graph") {
    std::string lines[] = {"4 9\n", "9 2\n", "2 4\n", "2 7\n", "7 4\n", "11 4\n"};
    Graph a = load_str(lines[0] + lines[1] + lines[2] + lines[3] + lines[4] + lines[5]);
    Graph b = load_str(lines[5] + lines[3] + lines[1] + lines[4] + lines[0] + lines[2]);
    CHECK(a.node_count() == b.node_count());
    CHECK(a.edge_count() == b.edge_count());
    CHECK(labeled_edge_set(a) == labeled_edge_set(b));

    std::vector<NodeId> da, db;
    for (NodeId v = 0; v < a.node_count(); ++v) da.push_back(a.degree(v));
    for (NodeId v = 0; v < b.node_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    CHECK(da == db);
}

TEST_CASE("write_edge_list round-trips through load") {
    Graph g = load_str("3 1\n1 4\n4 3\n4 15\n");
    std::ostringstream out;
    write_edge_list(out, g);
    Graph back = load_str(out.str());
    CHECK(back.node_count() == g.node_count());
    CHECK(back.edge_count() == g.edge_count());
    CHECK(labeled_edge_set(back) == labeled_edge_set(g));
}

TEST_CASE("neighboring_edges: star-with-chord topology") {
    // center 1, leaves 2..4, plus the chord (3,4) — edge ids in input order
    Graph g = load_str("1 2\n1 3\n1 4\n3 4\n");
    auto sorted = [](std::vector<EdgeId> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(neighboring_edges(g, 0)) == std::vector<EdgeId>{1, 2});    // e(1,2)
    CHECK(sorted(neighboring_edges(g, 3)) == std::vector<EdgeId>{1, 2});    // e(3,4)
    CHECK(sorted(neighboring_edges(g, 1)) == std::vector<EdgeId>{0, 2, 3}); // e(1,3)
}

TEST_CASE("neighboring_edges: degenerate and complete cases") {
    Graph one = Graph::from_edges(2, {{0, 1}});
    CHECK(neighboring_edges(one, 0).empty());

    Graph k3 = make_graph({GraphKind::complete, 3, 0.0, 0});
    for (EdgeId e = 0; e < 3; ++e) {
        std::vector<EdgeId> n = neighboring_edges(k3, e);
        std::sort(n.begin(), n.end());
        std::vector<EdgeId> expect;
        for (EdgeId f = 0; f < 3; ++f)
            if (f != e) expect.push_back(f);
        CHECK(n == expect);
    }

    CHECK_THROWS_AS(neighboring_edges(one, 1), std::out_of_range);
}

TEST_CASE("neighboring_edges: equals brute force on random graphs") {
    Rng rng(404);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = make_graph(
            {GraphKind::erdos_renyi, static_cast<NodeId>(5 + rng.below(40)), 0.15, rng.next_u64()});
        if (g.edge_count() == 0) continue;
        EdgeId e = static_cast<EdgeId>(rng.below(g.edge_count()));
        std::vector<EdgeId> got = neighboring_edges(g, e);
        std::sort(got.begin(), got.end());

        std::vector<EdgeId> expect;
        const Edge& self = g.edge(e);
        for (EdgeId f = 0; f < g.edge_count(); ++f) {
            if (f == e) continue;
            const Edge& o = g.edge(f);
            if (o.u == self.u || o.v == self.u || o.u == self.v || o.v == self.v)
                expect.push_back(f);
        }
        REQUIRE(got == expect);
    }
}

TEST_CASE("induced_subgraph: brute-force membership filter") {
    Rng rng(777);
    for (int rep = 0; rep < 50; ++rep) {
        NodeId n = static_cast<NodeId>(6 + rng.below(40));
        Graph g = make_graph({GraphKind::erdos_renyi, n, 0.2, rng.next_u64()});

        std::vector<NodeId> keep;
        for (NodeId v = 0; v < n; ++v)
            if (rng.next_u64() & 1) keep.push_back(v);
        if (keep.size() < 2) keep = {0, 1};

        Graph sub = induced_subgraph(g, keep);
        CHECK(sub.node_count() == keep.size());

        std::size_t expect_edges = 0;
        std::vector<bool> in(n, false);
        for (NodeId v : keep) in[v] = true;
        for (const Edge& e : g.edges())
            if (in[e.u] && in[e.v]) ++expect_edges;
        REQUIRE(sub.edge_count() == expect_edges);

        // labels identify original nodes
        for (NodeId v = 0; v < sub.node_count(); ++v)
            CHECK(sub.label(v) == static_cast<std::int64_t>(keep[v]));
        for (const Edge& e : sub.edges()) {
            NodeId ou = keep[e.u], ov = keep[e.v];
            bool found = false;
            for (const AdjEntry& a : g.neighbors(ou))
                if (a.neighbor == ov) found = true;
            REQUIRE(found);
        }
    }
}

TEST_CASE("induced_subgraph: rejects bad node lists") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    std::vector<NodeId> oor = {0, 5};
    CHECK_THROWS_AS(induced_subgraph(g, oor), std::out_of_range);
    std::vector<NodeId> dup = {1, 1};
    CHECK_THROWS_AS(induced_subgraph(g, dup), std::invalid_argument);
}

TEST_CASE("identity labels when built without label table") {
    Graph g = Graph::from_edges(3, {{0, 2}});
    CHECK_FALSE(g.has_labels());
    CHECK(g.label(2) == 2);
    CHECK_THROWS_AS(g.label(3), std::out_of_range);
}

} // TEST_SUITE
