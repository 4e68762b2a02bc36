#ifndef CORE_CLUSTERING_HPP
#define CORE_CLUSTERING_HPP

#include "core/graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace core {

// Partition of the vertices into connected clusters, each with a center and
// a spanning BFS tree (parent pointers toward the center).
struct Clustering {
    double scale = 1;               // R
    std::vector<int> center_of;     // per-vertex center (the map f)
    std::vector<int> depth_of;      // hop distance to the center along the tree
    std::vector<int> parent_of;     // tree parent; self for centers
    std::vector<int> centers;       // distinct centers, increasing

    int cluster_count() const { return (int)centers.size(); }
    // members of each cluster, keyed by center, each list increasing
    std::map<int, std::vector<int>> members() const;
};

// Structural checks: connectivity of clusters, parent chains, depths.
// Throws on violation.
void validate_clustering(const Graph& g, const Clustering& c);

enum class WeightKind { Zero, UniformStart, Exponential, ExponentialTruncated, Deterministic };

// Additive shifts W(s) >= 0 per candidate center.
struct WeightAssignment {
    std::map<int, double> weights;
    WeightKind kind = WeightKind::Zero;
};

enum class CutoffMode { LnN, LnR, None };

struct MpxParams {
    double R = 1;
    CutoffMode cutoff_mode = CutoffMode::LnN;
    // Cutoff constant C; if growth_k > 0 is supplied the default is k+1.001,
    // otherwise 4.
    double C_cutoff = 4.0;
    double growth_k = 0;

    double effective_C() const { return growth_k > 0 ? growth_k + 1.001 : C_cutoff; }
};

// f(v) = argmin_{s in S} d(s,v), ties to the smallest center id.
Clustering voronoi(const Graph& g, const std::vector<int>& S);

// f(v) = argmin_{s in S} d(s,v) - W(s), ties to the smallest center id,
// then smallest parent id along the recorded tree. Centers that lose
// themselves produce no cluster.
Clustering weighted_voronoi(const Graph& g, const std::vector<int>& S,
                            const WeightAssignment& w, double scale = 1);

enum class MisStrategy { GreedyId, Luby };

// Maximal independent set of G^{<=R} (pairwise hop distance > R, every
// vertex within distance R of the set), via bounded-depth BFS views.
std::vector<int> mis_power_graph(const Graph& g, int R,
                                 MisStrategy strategy = MisStrategy::GreedyId,
                                 uint64_t seed = 0);

enum class StartTimes { Zero, Uniform };

// MIS-centered Voronoi clustering at scale R. Start times are discrete
// uniform on {0,...,floor(R/10)} (Uniform) or all zero (Zero).
Clustering mis_voronoi(const Graph& g, int R, StartTimes st, uint64_t seed = 0);

// The per-center start times used by mis_voronoi(Uniform) for a given seed.
std::vector<int> uniform_start_times(const std::vector<int>& centers, int R, uint64_t seed);

// Clustering from explicit integer start times (center s starts flooding at
// start[s]; earlier arrival wins, ties to smaller center id).
Clustering start_time_voronoi(const Graph& g, const std::vector<int>& centers,
                              const std::map<int, int>& start, double scale);

// Additively weighted Voronoi with S = V and i.i.d. Exponential(mean R)
// shifts, truncated per params.cutoff_mode. Deterministic given seed.
Clustering mpx(const Graph& g, const MpxParams& params, uint64_t seed);

// The sampled (possibly truncated) weights mpx would use; exposed for tests.
std::vector<double> mpx_weights(const Graph& g, const MpxParams& params, uint64_t seed);

struct DerandResult {
    Clustering clustering;
    std::map<int, int> start_times;
    double initial_expectation = 0;  // exact a-priori expected crossing count
    long long final_crossings = 0;
    std::vector<double> expectation_steps; // conditional expectation after each fixing
};

// Deterministic start times via the method of conditional expectations on
// the crossing-edge count; greedy coloring of the competing-centers graph
// G* (centers adjacent iff hop distance <= 2.2R+1) fixes the order.
DerandResult derandomized_start_times(const Graph& g, int R);

// Quotient graph: one node per nonempty cluster plus the vertex->node map.
struct ClusterGraph {
    Graph quotient;
    std::vector<int> node_of;        // per base vertex
    std::vector<int> center_of_node; // per quotient node
};
ClusterGraph cluster_graph(const Graph& g, const Clustering& c);

// Luby's maximal independent set on an implicit graph given by a neighbor
// oracle; per-vertex round randomness from hash(seed, vertex, round).
// Shared by the sequential and the simulated distributed implementations.
std::vector<int> luby_mis(int n, const std::function<std::vector<int>(int)>& neighbors,
                          uint64_t seed, int* rounds_used = nullptr);

// The value vertex v draws in Luby round r (uniform 64-bit; ties by id).
uint64_t luby_value(uint64_t seed, int v, int round);

} // namespace core

#endif
