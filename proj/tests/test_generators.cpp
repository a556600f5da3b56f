#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "wes/error.hpp"
#include "wes/generators.hpp"
#include "wes/graph.hpp"

using namespace wes;

namespace {

std::vector<std::pair<NodeId, NodeId>> edge_pairs(const Graph& g) {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

} // namespace

TEST_SUITE("generators") {

TEST_CASE("complete graphs") {
    Graph k10 = make_graph({GraphKind::complete, 10, 0.0, 0});
    CHECK(k10.node_count() == 10);
    CHECK(k10.edge_count() == 45);
    for (NodeId v = 0; v < 10; ++v) CHECK(k10.degree(v) == 9);

    Graph k5 = make_graph({GraphKind::complete, 5, 0.0, 0});
    CHECK(k5.edge_count() == 10);
    for (NodeId v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);

    Graph k1 = make_graph({GraphKind::complete, 1, 0.0, 0});
    CHECK(k1.node_count() == 1);
    CHECK(k1.edge_count() == 0);
}

TEST_CASE("path graphs") {
    Graph p6 = make_graph({GraphKind::path, 6, 0.0, 0});
    CHECK(p6.edge_count() == 5);
    CHECK(p6.degree(0) == 1);
    CHECK(p6.degree(5) == 1);
    for (NodeId v = 1; v < 5; ++v) CHECK(p6.degree(v) == 2);
    CHECK(edge_pairs(p6) ==
          std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});

    CHECK(make_graph({GraphKind::path, 1, 0.0, 0}).edge_count() == 0);
    CHECK(make_graph({GraphKind::path, 2, 0.0, 0}).edge_count() == 1);
}

TEST_CASE("star graphs") {
    Graph s = make_graph({GraphKind::star, 9, 0.0, 0});
    CHECK(s.edge_count() == 8);
    CHECK(s.degree(0) == 8);
    for (NodeId v = 1; v < 9; ++v) CHECK(s.degree(v) == 1);
    for (const Edge& e : s.edges()) CHECK(e.u == 0);
}

TEST_CASE("cycle graphs") {
    Graph c5 = make_graph({GraphKind::cycle, 5, 0.0, 0});
    CHECK(c5.node_count() == 5);
    CHECK(c5.edge_count() == 5);
    for (NodeId v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    // C3 is the triangle
    Graph c3 = make_graph({GraphKind::cycle, 3, 0.0, 0});
    CHECK(c3.edge_count() == 3);

    CHECK_THROWS_AS(make_graph({GraphKind::cycle, 2, 0.0, 0}), ConfigError);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(make_graph({GraphKind::complete, 0, 0.0, 0}), ConfigError);
    CHECK_THROWS_AS(make_graph({GraphKind::erdos_renyi, 5, -0.1, 0}), ConfigError);
    CHECK_THROWS_AS(make_graph({GraphKind::erdos_renyi, 5, 1.5, 0}), ConfigError);
}

TEST_CASE("erdos-renyi limit probabilities") {
    Graph dense = make_graph({GraphKind::erdos_renyi, 20, 1.0, 123});
    CHECK(dense.edge_count() == 190); // every pair present
    Graph empty = make_graph({GraphKind::erdos_renyi, 20, 0.0, 123});
    CHECK(empty.edge_count() == 0);
}

TEST_CASE("erdos-renyi is a pure function of its spec") {
    GraphSpec spec{GraphKind::erdos_renyi, 150, 0.03, 42};
    Graph a = make_graph(spec);
    Graph b = make_graph(spec);
    CHECK(edge_pairs(a) == edge_pairs(b));

    Graph c = make_graph({GraphKind::erdos_renyi, 150, 0.03, 43});
    CHECK(edge_pairs(a) != edge_pairs(c));
}

TEST_CASE("erdos-renyi edge counts follow the binomial law") {
    // n = 200, p = 0.05: 19900 pairs, mean 995, sd ~30.75
    const double mean = 19900.0 * 0.05;
    const double sd = std::sqrt(19900.0 * 0.05 * 0.95);
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = make_graph({GraphKind::erdos_renyi, 200, 0.05, seed});
        double count = static_cast<double>(g.edge_count());
        CHECK(std::abs(count - mean) < 5.0 * sd); // individual draws
        sum += count;
    }
    double avg = sum / 100.0;
    CHECK(std::abs(avg - mean) < 3.0 * sd / 10.0); // mean of 100 draws
}

TEST_CASE("kind names round-trip") {
    for (GraphKind k : {GraphKind::complete, GraphKind::path, GraphKind::star,
                        GraphKind::cycle, GraphKind::erdos_renyi})
        CHECK(parse_kind(to_string(k)) == k);
    CHECK(parse_kind("er") == GraphKind::erdos_renyi);
    CHECK_THROWS_AS(parse_kind("lattice"), ConfigError);
    CHECK_THROWS_AS(parse_kind(""), ConfigError);
}

} // TEST_SUITE
