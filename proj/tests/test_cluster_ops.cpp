#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/cluster_ops.hpp"
#include "core/clustering.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"

#include <algorithm>
#include <set>

using namespace core;

namespace {

std::vector<std::vector<uint64_t>> id_states(int n) {
    std::vector<std::vector<uint64_t>> st(n);
    for (int v = 0; v < n; v++) st[v] = {(uint64_t)v};
    return st;
}

std::vector<long long> wake_rounds(const SimRun& run, int v) {
    std::vector<long long> out;
    for (const auto& ev : run.trace)
        if (ev.vertex == v && ev.event == "wake") out.push_back(ev.round);
    return out;
}

} // namespace

TEST_CASE("downcast schedule on a depth-2 path cluster") {
    Graph g = gen_path(3);
    Clustering c = voronoi(g, {0});
    long long t0 = 5;
    RunOptions opts;
    opts.record_trace = true;
    ClusterOpResult r = dist_cluster_op(g, c, ClusterOpKind::Downcast, t0, id_states(3), opts);
    // the depth-2 vertex is awake exactly in rounds t0+1 and t0+2
    CHECK(wake_rounds(r.run, 2) == std::vector<long long>{t0 + 1, t0 + 2});
    for (int v = 0; v < 3; v++) {
        CHECK(r.run.energy[v] <= 2);
        CHECK(r.outputs[v] == std::vector<uint64_t>{0}); // the center's state
    }
}

TEST_CASE("upcast aggregates member states at the center") {
    Graph g = gen_path(5);
    Clustering c = voronoi(g, {2});
    ClusterOpResult r = dist_cluster_op(g, c, ClusterOpKind::Upcast, 0, id_states(5));
    CHECK(r.outputs[2] == std::vector<uint64_t>{0, 1, 2, 3, 4});
    for (int v = 0; v < 5; v++) CHECK(r.run.energy[v] <= 2);
}

TEST_CASE("singleton cluster ops cost at most one energy unit") {
    Graph g = gen_path(2);
    Clustering c = voronoi(g, {0, 1});
    for (auto kind : {ClusterOpKind::Downcast, ClusterOpKind::Upcast}) {
        ClusterOpResult r = dist_cluster_op(g, c, kind, 0, id_states(2));
        for (int v = 0; v < 2; v++) CHECK(r.run.energy[v] <= 1);
    }
}

TEST_CASE("intercast exchanges boundary states in one round") {
    Graph g = gen_path(2);
    Clustering c = voronoi(g, {0, 1});
    ClusterOpResult r = dist_cluster_op(g, c, ClusterOpKind::Intercast, 0, id_states(2));
    // records of (neighbor id, payload length, payload...)
    CHECK(r.outputs[0] == std::vector<uint64_t>{1, 1, 1});
    CHECK(r.outputs[1] == std::vector<uint64_t>{0, 1, 0});
    for (int v = 0; v < 2; v++) CHECK(r.run.energy[v] == 1);
}

TEST_CASE("ops respect energy bounds on a multi-cluster cycle") {
    Graph g = gen_cycle(60);
    Clustering c = mis_voronoi(g, 7, StartTimes::Zero);
    auto st = id_states(g.n);
    for (auto kind : {ClusterOpKind::Downcast, ClusterOpKind::Upcast, ClusterOpKind::Intercast}) {
        ClusterOpResult r = dist_cluster_op(g, c, kind, 3, st);
        long long cap = kind == ClusterOpKind::Intercast ? 1 : 2;
        for (int v = 0; v < g.n; v++) CHECK(r.run.energy[v] <= cap);
        if (kind == ClusterOpKind::Downcast)
            for (int v = 0; v < g.n; v++)
                CHECK(r.outputs[v] == std::vector<uint64_t>{(uint64_t)c.center_of[v]});
        if (kind == ClusterOpKind::Upcast) {
            auto mem = c.members();
            for (int s : c.centers) {
                std::vector<uint64_t> expect;
                for (int v : mem.at(s)) expect.push_back((uint64_t)v);
                CHECK(r.outputs[s] == expect);
            }
        }
    }
}

TEST_CASE("cluster views reject broken trees") {
    Graph g = gen_path(3);
    Clustering c = voronoi(g, {0});
    c.parent_of[2] = 2; // orphaned non-center
    CHECK_THROWS_AS(make_cluster_views(g, c), InconsistentTreeView);
}

TEST_CASE("cluster views carry the schedule inputs") {
    Graph g = gen_cycle(12);
    Clustering c = mis_voronoi(g, 3, StartTimes::Zero);
    auto views = make_cluster_views(g, c);
    for (int v = 0; v < g.n; v++) {
        CHECK(views[v].center_id == c.center_of[v]);
        CHECK(views[v].depth == c.depth_of[v]);
        if (c.depth_of[v] == 0) CHECK(views[v].parent_port == -1);
        int boundary = 0;
        for (int u : g.adjacency[v])
            if (c.center_of[u] != c.center_of[v]) boundary++;
        CHECK((int)views[v].boundary_ports.size() == boundary);
    }
}
