#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/clustering.hpp"
#include "core/distalgo.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/metrics.hpp"

#include <algorithm>
#include <set>

using namespace core;

TEST_CASE("distributed mis voronoi equals the sequential construction") {
    for (const Graph& g : {gen_cycle(12), gen_cycle(37), gen_grid({6, 7}, false), gen_comb(3, 8)}) {
        for (int R : {2, 3, 5}) {
            DistClusteringResult r = dist_mis_voronoi(g, R, StartTimes::Zero);
            Clustering seq = mis_voronoi(g, R, StartTimes::Zero);
            CHECK(r.clustering.center_of == seq.center_of);
            CHECK(r.clustering.depth_of == seq.depth_of);
            CHECK(r.clustering.parent_of == seq.parent_of);
        }
    }
}

TEST_CASE("distributed uniform variant matches the sequential shifts") {
    Graph g = gen_cycle(90);
    int R = 20;
    uint64_t seed = 3;
    DistClusteringResult r = dist_mis_voronoi(g, R, StartTimes::Uniform,
                                              CenterMode::OracleGreedyId, seed);
    Clustering seq = mis_voronoi(g, R, StartTimes::Uniform, seed);
    CHECK(r.clustering.center_of == seq.center_of);
    CHECK(r.clustering.parent_of == seq.parent_of);
}

TEST_CASE("in-simulation luby centers form a valid mis voronoi clustering") {
    for (const Graph& g : {gen_cycle(40), gen_grid({6, 6}, false)}) {
        int R = 3;
        uint64_t seed = 9;
        DistClusteringResult r = dist_mis_voronoi(g, R, StartTimes::Zero, CenterMode::Luby, seed);
        validate_clustering(g, r.clustering);
        const auto& S = r.clustering.centers;
        for (int a : S)
            for (int b : S)
                if (a != b) CHECK(bfs_distances(g, a)[b] > R);
        for (int v = 0; v < g.n; v++) CHECK(bfs_distances(g, r.clustering.center_of[v])[v] <= R);
        // recruitment equals sequential voronoi from the same centers
        Clustering seq = voronoi(g, S);
        CHECK(r.clustering.center_of == seq.center_of);
    }
}

TEST_CASE("single vertex runs trivially") {
    Graph g = gen_path(1);
    DistClusteringResult r = dist_mis_voronoi(g, 2, StartTimes::Zero);
    CHECK(r.clustering.cluster_count() == 1);
}

TEST_CASE("grid uniform clusters satisfy the 2.2R diameter bound") {
    Graph g = gen_grid({20, 20}, false);
    DistClusteringResult r = dist_mis_voronoi(g, 4, StartTimes::Uniform,
                                              CenterMode::OracleGreedyId, 17);
    MetricsReport m = distortion(g, r.clustering);
    CHECK(m.max_cluster_diameter <= (int)std::ceil(2.2 * 4));
}

TEST_CASE("build_next_level from singletons equals sequential scale-2 clustering") {
    Graph g = gen_cycle(64);
    Clustering level0;
    level0.scale = 1;
    for (int v = 0; v < g.n; v++) {
        level0.center_of.push_back(v);
        level0.depth_of.push_back(0);
        level0.parent_of.push_back(v);
        level0.centers.push_back(v);
    }
    BuildLevelResult r = build_next_level(g, level0, 1);
    Clustering seq = mis_voronoi(g, 2, StartTimes::Zero);
    CHECK(r.clustering.center_of == seq.center_of);
    CHECK(r.clustering.parent_of == seq.parent_of);
}

TEST_CASE("build_next_level keeps a whole-graph cluster unchanged") {
    Graph g = gen_cycle(16);
    Clustering one = mis_voronoi(g, 8, StartTimes::Zero);
    REQUIRE(one.cluster_count() == 1);
    BuildLevelResult r = build_next_level(g, one, 8);
    CHECK(r.clustering.cluster_count() == 1);
    CHECK(r.clustering.centers == one.centers);
}

TEST_CASE("multi_scale") {
    Graph g = gen_cycle(64);
    MultiScaleResult zero = multi_scale(g, 0);
    REQUIRE(zero.levels.size() == 1);
    for (int v = 0; v < g.n; v++) CHECK(zero.levels[0].center_of[v] == v);

    MultiScaleResult ms = multi_scale(g, 4);
    REQUIRE(ms.levels.size() == 5);
    for (int i = 0; i <= 4; i++) {
        CHECK(ms.levels[i].scale == doctest::Approx(1 << i));
        validate_clustering(g, ms.levels[i]);
        // bootstrapped levels keep cluster radii within a constant of the scale
        int R = 1 << i;
        for (int v = 0; v < g.n; v++)
            CHECK(bfs_distances(g, ms.levels[i].center_of[v])[v] <= 2 * R);
    }
    // energy grows with the level but stays bounded
    for (size_t i = 1; i < ms.cumulative_energy.size(); i++)
        CHECK(ms.cumulative_energy[i] >= ms.cumulative_energy[i - 1]);
}

TEST_CASE("covers") {
    Graph g = gen_cycle(12);
    CoverView cov = build_cover(g, 3, 2);
    CHECK(cov.centers == std::vector<int>{0, 4, 8});
    CHECK(cov.fold <= 3);
    for (int v = 0; v < g.n; v++) {
        CHECK((int)cov.memberships[v].size() <= cov.fold);
        // B_R(v) inside the home ball
        int home = cov.home_of[v];
        const CoverMembership* mem = nullptr;
        for (const auto& m : cov.memberships[v])
            if (m.cover_id == home) mem = &m;
        REQUIRE(mem != nullptr);
        CHECK(mem->depth + cov.R <= cov.ball_radius);
    }

    CoverView single = build_cover(g, 6, 2);
    CHECK(single.centers.size() == 1);
    CHECK(single.fold == 1);

    Graph grid = gen_grid({30, 30}, false);
    CoverView gc = build_cover(grid, 3, 2);
    CHECK(gc.fold <= 20); // constant fold: radius-6 balls around 4-separated centers
}

namespace {

// flood everything you have heard each round; output the sorted id set
TargetProgram collect_ids(long long T) {
    return [T](const VertexContext& ctx, std::vector<uint64_t>& state, long long round,
               const std::vector<std::pair<int, Message>>& inbox) -> TargetStep {
        if (state.empty()) state.push_back((uint64_t)ctx.id);
        std::set<uint64_t> seen(state.begin(), state.end());
        for (const auto& [port, msg] : inbox)
            for (uint64_t f : msg.fields) seen.insert(f);
        state.assign(seen.begin(), seen.end());
        TargetStep step;
        if (round < T) {
            Message m;
            for (uint64_t s : state) m.push(s, 64);
            for (int p = 0; p < ctx.degree; p++) step.sends.push_back({p, m});
        }
        step.output = state;
        return step;
    };
}

// three rounds of "my color = smallest value unused by smaller-id neighbors"
TargetProgram greedy_color(long long T) {
    return [T](const VertexContext& ctx, std::vector<uint64_t>& state, long long round,
               const std::vector<std::pair<int, Message>>& inbox) -> TargetStep {
        if (state.empty()) state = {(uint64_t)ctx.id, 0};
        std::set<std::pair<uint64_t, uint64_t>> nb; // (id, color) of neighbors
        for (const auto& [port, msg] : inbox) nb.insert({msg.get(0), msg.get(1)});
        std::set<uint64_t> used;
        for (auto& [id, col] : nb)
            if (id < (uint64_t)ctx.id) used.insert(col);
        uint64_t color = 0;
        while (used.count(color)) color++;
        state[1] = color;
        TargetStep step;
        if (round < T) {
            Message m;
            m.push(state[0], 64);
            m.push(state[1], 64);
            for (int p = 0; p < ctx.degree; p++) step.sends.push_back({p, m});
        }
        step.output = std::vector<uint64_t>{state[1]};
        return step;
    };
}

} // namespace

TEST_CASE("low-energy simulation reproduces direct executions") {
    Graph g = gen_cycle(256);
    int t = 4, segments = 2;
    long long T = (long long)t * segments;
    TargetProgram target = collect_ids(T);
    SimRun direct = run_target_direct(g, target, T);
    LocalSimResult sim = simulate_local_algorithm(g, target, t, segments);
    for (int v = 0; v < g.n; v++) {
        CHECK(sim.run.outputs[v] == direct.outputs[v]);
        // the collected set is exactly the radius-T ball
        auto b = ball(g, v, (int)T);
        std::vector<uint64_t> expect(b.begin(), b.end());
        CHECK(*sim.run.outputs[v] == expect);
    }

    Graph p = gen_path(100);
    TargetProgram colors = greedy_color(3);
    SimRun dc = run_target_direct(p, colors, 3);
    LocalSimResult sc = simulate_local_algorithm(p, colors, 3, 1);
    for (int v = 0; v < p.n; v++) CHECK(sc.run.outputs[v] == dc.outputs[v]);
}

TEST_CASE("ruling hierarchy") {
    Graph c16 = gen_cycle(16);
    RulingHierarchy h = ruling_hierarchy(c16, 3, ModelKind::Local);
    REQUIRE(h.levels.size() == 4);
    for (int i = 1; i <= 3; i++)
        CHECK(h.levels[i].set.size() <= h.levels[i - 1].set.size());
    for (int v = 0; v < c16.n; v++) {
        int best = c16.n;
        for (int s : h.levels[3].set) best = std::min(best, bfs_distances(c16, s)[v]);
        CHECK(best <= 7);
    }

    Graph k5 = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                              {2, 3}, {2, 4}, {3, 4}});
    RulingHierarchy hk = ruling_hierarchy(k5, 2, ModelKind::Local);
    CHECK(hk.levels[1].set.size() == 1);
    CHECK(hk.levels[2].set.size() == 1);

    Graph grid = gen_grid({20, 20}, false);
    RulingHierarchy hg = ruling_hierarchy(grid, 4, ModelKind::Local, 5);
    for (int i = 1; i <= 4; i++) {
        const auto& S = hg.levels[i].set;
        std::set<int> in(S.begin(), S.end());
        for (int a : S)
            for (int b : S)
                if (a != b) CHECK(bfs_distances(grid, a)[b] > (1 << (i - 1)));
    }

    // CONGEST simulation reaches the same sets as LOCAL
    RulingHierarchy hl = ruling_hierarchy(c16, 3, ModelKind::Local, 2);
    RulingHierarchy hc = ruling_hierarchy(c16, 3, ModelKind::Congest, 2);
    for (int i = 0; i <= 3; i++) CHECK(hl.levels[i].set == hc.levels[i].set);

    CHECK_THROWS_AS(ruling_hierarchy(c16, 2, ModelKind::RadioCongest), Error);
}
