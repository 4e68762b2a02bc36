#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/optimize.hpp"

#include <set>

using namespace core;

TEST_CASE("exact solvers on small graphs") {
    CHECK(exact_matching(gen_cycle(6)).size() == 3);
    CHECK(exact_matching(gen_cycle(7)).size() == 3);
    CHECK(exact_matching(gen_path(5)).size() == 2);
    // blossom case: triangle with a pendant needs odd-cycle handling
    Graph paw = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    CHECK(exact_matching(paw).size() == 2);

    CHECK(exact_mis(gen_path(5)).size() == 3);
    CHECK(exact_mis(gen_cycle(7)).size() == 3);
    CHECK(exact_maxcut(gen_cycle(5)).second == 4);
    CHECK(exact_maxcut(gen_cycle(6)).second == 6);
    CHECK(exact_maxcut(gen_path(9)).second == 8);
}

TEST_CASE("approximation meets the (1-eps) guarantee on cycles") {
    Graph g = gen_cycle(20);
    double eps = 0.2;
    for (Problem p : {Problem::Matching, Problem::Mis}) {
        ApproxResult r = approx_solve(p, g, eps, ApproxMode::Derandomized);
        validate_approx(g, r);
        CHECK(r.value >= (long long)((1 - eps) * 10)); // opt = n/2 = 10 for both
        CHECK(r.R == 20); // ceil(4/0.2)
    }
    ApproxResult cut = approx_solve(Problem::MaxCut, g, eps, ApproxMode::Derandomized);
    validate_approx(g, cut);
    CHECK(cut.value >= (long long)((1 - eps) * 20));
}

TEST_CASE("randomized mode also validates and reports the clustering") {
    Graph g = gen_cycle(60);
    ApproxResult r = approx_solve(Problem::Matching, g, 0.1, ApproxMode::Randomized, 5);
    validate_approx(g, r);
    CHECK(r.clustering.cluster_count() >= 1);
    CHECK(r.value >= (long long)(0.9 * 30));
}

TEST_CASE("one-cluster instances are solved exactly") {
    // eps small enough that R >= diameter: a single cluster, exact answers
    Graph g = gen_cycle(8);
    ApproxResult m = approx_solve(Problem::Matching, g, 0.4, ApproxMode::Derandomized);
    CHECK(m.value == 4);
    ApproxResult i = approx_solve(Problem::Mis, g, 0.4, ApproxMode::Derandomized);
    CHECK(i.value == 4);
    ApproxResult c = approx_solve(Problem::MaxCut, g, 0.4, ApproxMode::Derandomized);
    CHECK(c.value == 8);
}

TEST_CASE("mpx-based approximation") {
    Graph k2 = gen_path(2);
    ApproxResult one = approx_solve_mpx(Problem::Matching, k2, 0.5, 3);
    validate_approx(k2, one);
    CHECK(one.value == 1);

    Graph g = gen_cycle(200);
    ApproxResult m = approx_solve_mpx(Problem::Matching, g, 0.1, 7);
    validate_approx(g, m);
    CHECK(m.value >= 1);
    ApproxResult i = approx_solve_mpx(Problem::Mis, g, 0.1, 7);
    validate_approx(g, i);
    CHECK(i.value >= 1);
}

TEST_CASE("independent set output is independent and matching is disjoint") {
    Graph g = gen_grid({8, 8}, false);
    ApproxResult i = approx_solve(Problem::Mis, g, 0.3, ApproxMode::Randomized, 2);
    std::set<int> in(i.vertex_set.begin(), i.vertex_set.end());
    for (int v : i.vertex_set)
        for (int u : g.adjacency[v]) CHECK(!in.count(u));
    CHECK((long long)i.vertex_set.size() == i.value);

    ApproxResult m = approx_solve(Problem::Matching, g, 0.3, ApproxMode::Randomized, 2);
    std::set<int> used;
    for (auto [u, v] : m.edges) {
        CHECK(!used.count(u));
        CHECK(!used.count(v));
        used.insert(u);
        used.insert(v);
    }
}

TEST_CASE("derandomized runs expose the expectation descent") {
    Graph g = gen_cycle(100);
    ApproxResult r = approx_solve(Problem::Matching, g, 0.1, ApproxMode::Derandomized);
    double prev = r.initial_expectation;
    for (double e : r.expectation_steps) {
        CHECK(e >= prev - 1e-9); // objective expectation never drops
        prev = e;
    }
    CHECK((double)r.value >= r.initial_expectation - 1e-9);
}

TEST_CASE("formatting helpers") {
    CHECK(problem_name(Problem::Matching) == "matching");
    CHECK(problem_name(Problem::Mis) == "mis");
    CHECK(problem_name(Problem::MaxCut) == "maxcut");
    Graph g = gen_cycle(8);
    ApproxResult r = approx_solve(Problem::Matching, g, 0.4, ApproxMode::Derandomized);
    std::string s = format_approx(r);
    CHECK(s.find("matching") != std::string::npos);
    CHECK(s.find("4") != std::string::npos);
}
