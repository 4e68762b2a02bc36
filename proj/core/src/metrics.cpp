#include "core/metrics.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/rng.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace core {

CrossingStats crossing_stats(const Graph& g, const Clustering& c) {
    CrossingStats out;
    for (int u = 0; u < g.n; u++) {
        for (int v : g.adjacency[u]) {
            if (v < u) continue;
            bool crossing = c.center_of[u] != c.center_of[v];
            out.crossing_flag.push_back(crossing ? 1 : 0);
            if (crossing) out.count++;
        }
    }
    long long m = (long long)out.crossing_flag.size();
    out.fraction = m > 0 ? (double)out.count / (double)m : 0.0;
    return out;
}

namespace {

// BFS restricted to one cluster; returns eccentricity of `src` inside it.
int cluster_ecc(const Graph& g, const std::vector<int>& center_of, int src) {
    std::queue<int> q;
    std::map<int, int> d; // clusters are small, a map keeps this allocation-light
    d[src] = 0;
    q.push(src);
    int ecc = 0;
    int cid = center_of[src];
    while (!q.empty()) {
        int u = q.front(); q.pop();
        int du = d[u];
        ecc = std::max(ecc, du);
        for (int v : g.adjacency[u]) {
            if (center_of[v] != cid) continue;
            if (d.find(v) == d.end()) {
                d[v] = du + 1;
                q.push(v);
            }
        }
    }
    return ecc;
}

} // namespace

int max_strong_cluster_diameter(const Graph& g, const Clustering& c) {
    int best = 0;
    for (int v = 0; v < g.n; v++) best = std::max(best, cluster_ecc(g, c.center_of, v));
    return best;
}

int longest_singleton_run_cycle(const Graph& g, const Clustering& c) {
    if (g.n < 3) throw NotACycle();
    for (int v = 0; v < g.n; v++)
        if (g.adjacency[v].size() != 2) throw NotACycle();
    // walk the cycle to get the cyclic vertex order
    std::vector<int> order;
    order.reserve(g.n);
    int prev = -1, cur = 0;
    for (int i = 0; i < g.n; i++) {
        order.push_back(cur);
        int nxt = g.adjacency[cur][0] == prev ? g.adjacency[cur][1] : g.adjacency[cur][0];
        prev = cur;
        cur = nxt;
    }
    std::map<int, int> size;
    for (int v = 0; v < g.n; v++) size[c.center_of[v]]++;
    std::vector<char> singleton(g.n, 0);
    int total_singletons = 0;
    for (int i = 0; i < g.n; i++) {
        singleton[i] = (size[c.center_of[order[i]]] == 1);
        total_singletons += singleton[i];
    }
    if (total_singletons == g.n) return g.n;
    // longest cyclic run: scan doubled sequence starting after a non-singleton
    int start = 0;
    while (singleton[start]) start++;
    int best = 0, run = 0;
    for (int i = 0; i < g.n; i++) {
        int j = (start + 1 + i) % g.n;
        if (singleton[j]) { run++; best = std::max(best, run); }
        else run = 0;
    }
    return best;
}

MetricsReport distortion(const Graph& g, const Clustering& c, const DistortionOptions& opt) {
    validate_clustering(g, c);
    MetricsReport rep;
    double R = c.scale;

    auto cs = crossing_stats(g, c);
    rep.crossing_edges = cs.count;
    rep.crossing_fraction = cs.fraction;
    rep.cluster_count = c.cluster_count();
    {
        std::map<int, int> size;
        for (int v = 0; v < g.n; v++) size[c.center_of[v]]++;
        for (auto [center, s] : size) rep.cluster_size_histogram[s]++;
    }

    // cond2: strong cluster diameter
    rep.max_cluster_diameter = max_strong_cluster_diameter(g, c);
    rep.cond2_value = rep.max_cluster_diameter / R;

    // cluster-graph all-pairs distances
    auto cg = cluster_graph(g, c);
    int k = cg.quotient.n;
    std::vector<std::vector<int>> qdist(k);
    for (int i = 0; i < k; i++) qdist[i] = bfs_distances(cg.quotient, i);

    double cond1 = 1;
    auto consider = [&](int d_g, int d_q) {
        double ratio = (1.0 + d_g / R) / (1.0 + d_q);
        cond1 = std::max(cond1, std::max(ratio, 1.0 / ratio));
    };

    if (g.n <= opt.full_pair_limit) {
        rep.cond1_exact = true;
        for (int v = 0; v < g.n; v++) {
            auto dist = bfs_distances(g, v);
            int nv = cg.node_of[v];
            for (int w = v + 1; w < g.n; w++) consider(dist[w], qdist[nv][cg.node_of[w]]);
        }
    } else {
        rep.cond1_exact = false; // sampled: a lower bound on the true cond1
        // all adjacent pairs (d = 1)
        for (int u = 0; u < g.n; u++)
            for (int v : g.adjacency[u])
                if (u < v) consider(1, qdist[cg.node_of[u]][cg.node_of[v]]);
        // random BFS sources cover the long-range regime
        long long sources = std::max<long long>(1, opt.sample_pairs / g.n);
        Rng rng(opt.sample_seed);
        for (long long i = 0; i < sources; i++) {
            int v = (int)rng.next_below((uint64_t)g.n);
            auto dist = bfs_distances(g, v);
            int nv = cg.node_of[v];
            for (int w = 0; w < g.n; w++)
                if (w != v) consider(dist[w], qdist[nv][cg.node_of[w]]);
        }
    }
    rep.cond1_value = cond1;
    rep.distortion = std::max({1.0, rep.cond1_value, rep.cond2_value});

    // singleton runs are defined only on cycles
    bool is_cycle = g.n >= 3;
    for (int v = 0; v < g.n && is_cycle; v++)
        if (g.adjacency[v].size() != 2) is_cycle = false;
    if (is_cycle) rep.longest_singleton_run = longest_singleton_run_cycle(g, c);
    return rep;
}

std::vector<MpxPathologyTrial> mpx_pathology_cycle(int n, double R, int trials, uint64_t seed) {
    Graph g = gen_cycle(n); // throws for n < 3; degree check below is then moot
    MpxParams params;
    params.R = R;
    params.cutoff_mode = CutoffMode::LnN;
    params.growth_k = 1; // cycles have growth exponent 1
    std::vector<MpxPathologyTrial> out;
    for (int t = 0; t < trials; t++) {
        Clustering c = mpx(g, params, hash_combine(seed, (uint64_t)t));
        MpxPathologyTrial trial;
        // clusters on a cycle are arcs: diameter = size-1, except a single
        // cluster covering the whole cycle (diameter floor(n/2)).
        std::map<int, int> size;
        for (int v = 0; v < n; v++) size[c.center_of[v]]++;
        int diam = 0;
        if (size.size() == 1) diam = n / 2;
        else for (auto [s, len] : size) diam = std::max(diam, len - 1);
        trial.max_diam_over_R = diam / R;
        trial.longest_singleton_run = longest_singleton_run_cycle(g, c);
        out.push_back(trial);
    }
    return out;
}

std::string metrics_csv_header() {
    return "version,graph,algo,params,n,m,R,seed,distortion,cond1_value,cond1_exact,"
           "cond2_value,max_cluster_diameter,crossing_edges,crossing_fraction,"
           "cluster_count,longest_singleton_run";
}

std::string metrics_csv_row(const std::string& version, const std::string& graph_name,
                            const std::string& algo, const std::string& params,
                            int n, int m, double R, uint64_t seed,
                            const MetricsReport& rep) {
    std::ostringstream os;
    os.precision(12);
    os << version << ',' << graph_name << ',' << algo << ',' << params << ','
       << n << ',' << m << ',' << R << ',' << seed << ','
       << rep.distortion << ',' << rep.cond1_value << ',' << (rep.cond1_exact ? 1 : 0) << ','
       << rep.cond2_value << ',' << rep.max_cluster_diameter << ','
       << rep.crossing_edges << ',' << rep.crossing_fraction << ','
       << rep.cluster_count << ',';
    if (rep.longest_singleton_run) os << *rep.longest_singleton_run;
    return os.str();
}

} // namespace core
