#ifndef CORE_OPTIMIZE_HPP
#define CORE_OPTIMIZE_HPP

#include "core/clustering.hpp"
#include "core/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace core {

enum class Problem { Matching, Mis, MaxCut };
enum class ApproxMode { Randomized, Derandomized };

struct ApproxResult {
    Problem problem = Problem::Matching;
    ApproxMode mode = ApproxMode::Randomized;
    double epsilon = 0;
    uint64_t seed = 0;
    int R = 0;
    long long value = 0;
    std::vector<std::pair<int, int>> edges; // matching edges, or the cut edge set
    std::vector<int> vertex_set;            // independent set
    std::vector<char> side;                 // max-cut bipartition, one flag per vertex
    std::optional<long long> opt_reference; // exact optimum when cheaply computable
    double initial_expectation = 0;         // derandomized: a-priori objective expectation
    std::vector<double> expectation_steps;  // derandomized: after each fixed start time
    Clustering clustering;                  // the clustering the solution was built on
};

// Exact solvers. Matching is exact on general graphs (augmenting paths with
// blossom contraction). MIS and max-cut use dynamic programming on paths and
// cycles (any size) and branch and bound otherwise (InstanceTooLarge beyond
// cap vertices).
std::vector<std::pair<int, int>> exact_matching(const Graph& g);
std::vector<int> exact_mis(const Graph& g, int cap = 64);
std::pair<std::vector<char>, long long> exact_maxcut(const Graph& g, int cap = 64);

// (1-eps)-approximation: cluster at R = ceil(4/eps) (uniform random start
// times, or start times fixed by objective-aware conditional expectations),
// solve each cluster exactly, and take the union. Crossing edges are
// dropped; the MIS fix-up removes one endpoint per conflicting crossing
// edge; cut edges that cross clusters count toward the cut value.
ApproxResult approx_solve(Problem problem, const Graph& g, double epsilon,
                          ApproxMode mode, uint64_t seed = 0);

// Same pipeline on an mpx clustering with the ln-R cutoff, R = ceil(4/eps);
// the (1-eps) guarantee holds in expectation over seeds.
ApproxResult approx_solve_mpx(Problem problem, const Graph& g, double epsilon,
                              uint64_t seed = 0);

// Feasibility assertions: matching vertex-disjoint, independent set
// edge-free, cut value equal to a recount from the bipartition. Throws.
void validate_approx(const Graph& g, const ApproxResult& r);

std::string problem_name(Problem p);
std::string format_approx(const ApproxResult& r);

} // namespace core

#endif
