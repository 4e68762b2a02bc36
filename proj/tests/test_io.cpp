#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/clustering.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/io.hpp"

#include <sstream>

using namespace core;

TEST_CASE("edge list round trip") {
    Graph g = gen_grid({4, 5}, false);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    Graph h = read_edge_list(in);
    CHECK(h.n == g.n);
    CHECK(h.m() == g.m());
    CHECK(h.adjacency == g.adjacency);
}

TEST_CASE("edge list round trip with coordinates") {
    Graph g = gen_random_geometric(40, 2, 1.5, 11);
    REQUIRE(!g.coords.empty());
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    Graph h = read_edge_list(in);
    CHECK(h.adjacency == g.adjacency);
    REQUIRE(h.coords.size() == g.coords.size());
    for (size_t i = 0; i < g.coords.size(); i++)
        for (size_t k = 0; k < g.coords[i].size(); k++)
            CHECK(h.coords[i][k] == doctest::Approx(g.coords[i][k]));
}

TEST_CASE("clustering round trip") {
    Graph g = gen_cycle(30);
    Clustering c = mis_voronoi(g, 4, StartTimes::Zero);
    std::ostringstream out;
    write_clustering(out, c);
    std::istringstream in(out.str());
    Clustering d = read_clustering(in);
    CHECK(d.scale == doctest::Approx(c.scale));
    CHECK(d.center_of == c.center_of);
    CHECK(d.depth_of == c.depth_of);
    CHECK(d.parent_of == c.parent_of);
    CHECK(d.centers == c.centers);
}

TEST_CASE("malformed inputs raise format errors") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_edge_list(in);
    };
    CHECK_THROWS_AS(parse(""), FormatError);
    CHECK_THROWS_AS(parse("2"), FormatError);
    CHECK_THROWS_AS(parse("2 1\n0"), FormatError);
    CHECK_THROWS_AS(parse("2 1\n0 5"), Error); // vertex out of range
    CHECK_THROWS_AS(parse("x y\n"), FormatError);

    std::istringstream bad("clustering\n");
    CHECK_THROWS_AS(read_clustering(bad), FormatError);
    std::istringstream trunc("clustering 3\n0 0 0");
    CHECK_THROWS_AS(read_clustering(trunc), FormatError);
}

TEST_CASE("file helpers") {
    Graph g = gen_cycle(9);
    std::string path = "/tmp/test_io_graph.txt";
    write_edge_list_file(path, g);
    Graph h = read_edge_list_file(path);
    CHECK(h.adjacency == g.adjacency);
    CHECK_THROWS_AS(read_edge_list_file("/tmp/definitely_missing_file.txt"), Error);
}
