#ifndef CORE_METRICS_HPP
#define CORE_METRICS_HPP

#include "core/clustering.hpp"
#include "core/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace core {

struct MetricsReport {
    double distortion = 1;           // max(1, cond1_value, cond2_value)
    double cond1_value = 1;          // max over pairs of max(ratio, 1/ratio)
    bool cond1_exact = true;         // false when pair-sampled (lower bound)
    int max_cluster_diameter = 0;    // strong (induced-subgraph) diameter
    double cond2_value = 0;          // max_cluster_diameter / R
    long long crossing_edges = 0;
    double crossing_fraction = 0;
    int cluster_count = 0;
    std::map<int, int> cluster_size_histogram;      // size -> #clusters
    std::optional<int> longest_singleton_run;       // cycles only
};

struct DistortionOptions {
    // Full all-pairs evaluation when n <= full_pair_limit; otherwise a
    // sampled estimator (uniform random pairs plus all adjacent pairs),
    // labeled as a lower bound on cond1.
    int full_pair_limit = 10'000;
    long long sample_pairs = 200'000;
    uint64_t sample_seed = 1;
};

// Distance distortion per the definition: cond1 compares (1 + d(v,w)/R)
// against 1 + d'([v],[w]) in both directions; cond2 is the maximum strong
// cluster diameter divided by R. Fills the crossing/cluster fields too.
MetricsReport distortion(const Graph& g, const Clustering& c,
                         const DistortionOptions& opt = {});

struct CrossingStats {
    long long count = 0;
    double fraction = 0;
    std::vector<char> crossing_flag; // aligned with edge order (u<v, lexicographic)
};
CrossingStats crossing_stats(const Graph& g, const Clustering& c);

// Strong diameter of every cluster (BFS restricted to the cluster).
int max_strong_cluster_diameter(const Graph& g, const Clustering& c);

// Longest cyclic run of consecutive singleton clusters; requires a cycle.
int longest_singleton_run_cycle(const Graph& g, const Clustering& c);

struct MpxPathologyTrial {
    double max_diam_over_R = 0;
    int longest_singleton_run = 0;
};
// Appendix-style pathology experiment: MPX with the ln-n cutoff on a cycle.
std::vector<MpxPathologyTrial> mpx_pathology_cycle(int n, double R, int trials, uint64_t seed);

// Fixed CSV schema shared by the CLI and the sweep harness.
std::string metrics_csv_header();
std::string metrics_csv_row(const std::string& version, const std::string& graph_name,
                            const std::string& algo, const std::string& params,
                            int n, int m, double R, uint64_t seed,
                            const MetricsReport& rep);

} // namespace core

#endif
