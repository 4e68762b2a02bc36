#include "core/clustering.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <tuple>

namespace core {

std::map<int, std::vector<int>> Clustering::members() const {
    std::map<int, std::vector<int>> out;
    for (int v = 0; v < (int)center_of.size(); v++) out[center_of[v]].push_back(v);
    return out;
}

void validate_clustering(const Graph& g, const Clustering& c) {
    int n = g.n;
    if ((int)c.center_of.size() != n || (int)c.depth_of.size() != n || (int)c.parent_of.size() != n)
        throw Error("clustering: field sizes do not match the graph");
    std::set<int> centers(c.centers.begin(), c.centers.end());
    if (centers.size() != c.centers.size()) throw Error("clustering: duplicate centers");
    for (int s : c.centers) {
        if (s < 0 || s >= n) throw Error("clustering: center out of range");
        if (c.center_of[s] != s) throw Error("clustering: center not in its own cluster");
        if (c.depth_of[s] != 0) throw Error("clustering: center depth must be 0");
        if (c.parent_of[s] != s) throw Error("clustering: center parent must be itself");
    }
    for (int v = 0; v < n; v++) {
        int s = c.center_of[v];
        if (!centers.count(s)) throw Error("clustering: vertex assigned to unknown center");
        if (v == s) continue;
        int p = c.parent_of[v];
        if (p < 0 || p >= n) throw Error("clustering: parent out of range");
        if (!g.has_edge(v, p)) throw Error("clustering: parent must be a neighbor");
        if (c.center_of[p] != s) throw Error("clustering: parent in a different cluster");
        if (c.depth_of[p] != c.depth_of[v] - 1) throw Error("clustering: parent depth must be one less");
        if (c.depth_of[v] < 1) throw Error("clustering: non-center depth must be positive");
    }
    // depth-decreasing parent chains terminate at the center, so every
    // cluster induces a connected subgraph.
}

namespace {

struct Label {
    double key;   // d(s,v) - W(s); lower wins
    int center;   // tie 1: smaller center id
    int parent;   // tie 2: smaller parent id
    int hops;     // tree depth bookkeeping

    bool better_than(const Label& o) const {
        if (key != o.key) return key < o.key;
        if (center != o.center) return center < o.center;
        return parent < o.parent;
    }
};

Clustering shifted_multisource(const Graph& g, const std::vector<int>& S,
                               const std::map<int, double>& W, double scale) {
    if (S.empty()) throw EmptyCenterSet();
    int n = g.n;
    std::vector<Label> best(n, Label{0, -1, -1, 0});
    std::vector<char> settled(n, 0);
    using Entry = std::tuple<double, int, int, int, int>; // key, center, parent, hops, vertex
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    std::set<int> sset(S.begin(), S.end());
    if (sset.size() != S.size()) throw Error("duplicate centers");
    for (int s : S) {
        if (s < 0 || s >= n) throw Error("center out of range");
        auto it = W.find(s);
        double w = it == W.end() ? 0.0 : it->second;
        if (w < 0) throw Error("weights must be nonnegative");
        Label l{-w, s, s, 0};
        if (best[s].center < 0 || l.better_than(best[s])) {
            best[s] = l;
            pq.push({l.key, l.center, l.parent, l.hops, s});
        }
    }
    while (!pq.empty()) {
        auto [key, center, parent, hops, v] = pq.top();
        pq.pop();
        if (settled[v]) continue;
        Label cur{key, center, parent, hops};
        if (best[v].center != center || best[v].key != key || best[v].parent != parent) continue;
        settled[v] = 1;
        for (int u : g.adjacency[v]) {
            if (settled[u]) continue;
            Label cand{key + 1, center, v, hops + 1};
            if (best[u].center < 0 || cand.better_than(best[u])) {
                best[u] = cand;
                pq.push({cand.key, cand.center, cand.parent, cand.hops, u});
            }
        }
    }
    Clustering c;
    c.scale = scale;
    c.center_of.resize(n);
    c.depth_of.resize(n);
    c.parent_of.resize(n);
    for (int v = 0; v < n; v++) {
        if (best[v].center < 0) throw DisconnectedGraph();
        c.center_of[v] = best[v].center;
        c.depth_of[v] = best[v].hops;
        c.parent_of[v] = best[v].parent;
    }
    std::set<int> nonempty(c.center_of.begin(), c.center_of.end());
    c.centers.assign(nonempty.begin(), nonempty.end());
    return c;
}

} // namespace

Clustering voronoi(const Graph& g, const std::vector<int>& S) {
    return shifted_multisource(g, S, {}, 1);
}

Clustering weighted_voronoi(const Graph& g, const std::vector<int>& S,
                            const WeightAssignment& w, double scale) {
    return shifted_multisource(g, S, w.weights, scale);
}

std::vector<int> mis_power_graph(const Graph& g, int R, MisStrategy strategy, uint64_t seed) {
    if (R < 1) throw Error("mis_power_graph requires R >= 1");
    int n = g.n;
    if (strategy == MisStrategy::GreedyId) {
        // dist_to_S[v] = min hop distance to a chosen center, maintained
        // incrementally; v joins iff nothing chosen within distance R.
        std::vector<int> dist_to_S(n, -1);
        std::vector<int> S;
        for (int v = 0; v < n; v++) {
            if (dist_to_S[v] >= 0 && dist_to_S[v] <= R) continue;
            S.push_back(v);
            std::queue<int> q;
            dist_to_S[v] = 0;
            q.push(v);
            while (!q.empty()) {
                int u = q.front(); q.pop();
                if (dist_to_S[u] == R) continue;
                for (int x : g.adjacency[u]) {
                    if (dist_to_S[x] < 0 || dist_to_S[x] > dist_to_S[u] + 1) {
                        dist_to_S[x] = dist_to_S[u] + 1;
                        q.push(x);
                    }
                }
            }
        }
        return S;
    }
    // Luby on the power-graph view
    std::vector<std::vector<int>> pn(n);
    for (int v = 0; v < n; v++) {
        auto dist = bfs_distances_bounded(g, v, R);
        for (int u = 0; u < n; u++)
            if (u != v && dist[u] >= 1) pn[v].push_back(u);
    }
    return luby_mis(n, [&](int v) { return pn[v]; }, seed);
}

uint64_t luby_value(uint64_t seed, int v, int round) {
    return hash_combine(hash_combine(seed, (uint64_t)v), (uint64_t)round);
}

std::vector<int> luby_mis(int n, const std::function<std::vector<int>(int)>& neighbors,
                          uint64_t seed, int* rounds_used) {
    std::vector<char> active(n, 1), in_mis(n, 0);
    int remaining = n;
    int round = 0;
    while (remaining > 0) {
        std::vector<int> joiners;
        for (int v = 0; v < n; v++) {
            if (!active[v]) continue;
            uint64_t mine = luby_value(seed, v, round);
            bool win = true;
            for (int u : neighbors(v)) {
                if (!active[u]) continue;
                uint64_t theirs = luby_value(seed, u, round);
                if (theirs < mine || (theirs == mine && u < v)) { win = false; break; }
            }
            if (win) joiners.push_back(v);
        }
        for (int v : joiners) {
            if (!active[v]) continue; // already removed as a neighbor this round
            in_mis[v] = 1;
            active[v] = 0;
            remaining--;
            for (int u : neighbors(v))
                if (active[u]) { active[u] = 0; remaining--; }
        }
        round++;
        if (round > 64 * 64 && remaining > 0) throw Error("luby_mis failed to converge");
    }
    if (rounds_used) *rounds_used = round;
    std::vector<int> S;
    for (int v = 0; v < n; v++)
        if (in_mis[v]) S.push_back(v);
    return S;
}

std::vector<int> uniform_start_times(const std::vector<int>& centers, int R, uint64_t seed) {
    int T = R / 10;
    std::vector<int> st(centers.size());
    for (size_t i = 0; i < centers.size(); i++)
        st[i] = (int)(hash_combine(seed, (uint64_t)centers[i]) % (uint64_t)(T + 1));
    return st;
}

Clustering start_time_voronoi(const Graph& g, const std::vector<int>& centers,
                              const std::map<int, int>& start, double scale) {
    // center s flooding from time start[s] is an additive shift W(s) = T - start[s]
    int T = 0;
    for (auto [s, t] : start) {
        if (t < 0) throw Error("start times must be nonnegative");
        T = std::max(T, t);
    }
    WeightAssignment w;
    w.kind = WeightKind::UniformStart;
    for (int s : centers) {
        auto it = start.find(s);
        int t = it == start.end() ? 0 : it->second;
        w.weights[s] = (double)(T - t);
    }
    return weighted_voronoi(g, centers, w, scale);
}

Clustering mis_voronoi(const Graph& g, int R, StartTimes st, uint64_t seed) {
    if (R < 1) throw Error("mis_voronoi requires integer R >= 1");
    auto centers = mis_power_graph(g, R, MisStrategy::GreedyId);
    std::map<int, int> start;
    if (st == StartTimes::Uniform) {
        auto times = uniform_start_times(centers, R, seed);
        for (size_t i = 0; i < centers.size(); i++) start[centers[i]] = times[i];
    } else {
        for (int s : centers) start[s] = 0;
    }
    return start_time_voronoi(g, centers, start, R);
}

std::vector<double> mpx_weights(const Graph& g, const MpxParams& params, uint64_t seed) {
    if (params.R < 1) throw Error("mpx requires R >= 1");
    double R = params.R;
    double cutoff = -1;
    if (params.cutoff_mode == CutoffMode::LnN)
        cutoff = params.effective_C() * R * std::log((double)g.n);
    else if (params.cutoff_mode == CutoffMode::LnR)
        cutoff = params.effective_C() * R * std::log(std::max(R, std::exp(1.0)));
    std::vector<double> w(g.n);
    for (int v = 0; v < g.n; v++) {
        Rng rng(hash_combine(seed, (uint64_t)v));
        double d = rng.next_exponential(R);
        if (cutoff >= 0) d = std::min(d, cutoff);
        w[v] = d;
    }
    return w;
}

Clustering mpx(const Graph& g, const MpxParams& params, uint64_t seed) {
    auto wts = mpx_weights(g, params, seed);
    WeightAssignment w;
    w.kind = params.cutoff_mode == CutoffMode::None ? WeightKind::Exponential
                                                    : WeightKind::ExponentialTruncated;
    std::vector<int> S(g.n);
    for (int v = 0; v < g.n; v++) {
        S[v] = v;
        w.weights[v] = wts[v];
    }
    return weighted_voronoi(g, S, w, params.R);
}

ClusterGraph cluster_graph(const Graph& g, const Clustering& c) {
    ClusterGraph out;
    int k = (int)c.centers.size();
    std::vector<int> node_index(g.n, -1);
    for (int i = 0; i < k; i++) node_index[c.centers[i]] = i;
    out.node_of.resize(g.n);
    for (int v = 0; v < g.n; v++) out.node_of[v] = node_index[c.center_of[v]];
    std::set<std::pair<int, int>> qedges;
    for (int u = 0; u < g.n; u++) {
        for (int v : g.adjacency[u]) {
            if (u < v && out.node_of[u] != out.node_of[v]) {
                auto key = std::minmax(out.node_of[u], out.node_of[v]);
                qedges.insert({key.first, key.second});
            }
        }
    }
    out.quotient = make_graph(k, {qedges.begin(), qedges.end()});
    out.center_of_node = c.centers;
    return out;
}

namespace {

// Everything the crossing-edge derandomizer needs to evaluate one edge:
// the centers that can possibly win either endpoint, with their distances.
struct EdgeScene {
    int u, v;
    std::vector<int> centers;          // relevant centers, increasing id
    std::vector<int> du, dv;           // hop distances center->u, center->v (-1 = out of reach)
};

// Winner of vertex x given candidate arrival times; centers out of reach
// never win. Returns index into scene.centers.
int winner(const std::vector<int>& dx, const std::vector<int>& centers, const std::vector<int>& times) {
    int best = -1;
    long long bestArr = 0;
    for (size_t i = 0; i < centers.size(); i++) {
        if (dx[i] < 0) continue;
        long long arr = (long long)dx[i] + times[i];
        if (best < 0 || arr < bestArr || (arr == bestArr && centers[i] < centers[best])) {
            best = (int)i;
            bestArr = arr;
        }
    }
    return best;
}

// Exact probability that edge e crosses, with times of `fixed` centers
// pinned and the rest i.i.d. uniform on {0..T}: enumerate the joint grid.
double edge_crossing_probability(const EdgeScene& e, const std::map<int, int>& fixed, int T) {
    int k = (int)e.centers.size();
    std::vector<int> free_idx;
    std::vector<int> times(k, 0);
    for (int i = 0; i < k; i++) {
        auto it = fixed.find(e.centers[i]);
        if (it != fixed.end()) times[i] = it->second;
        else free_idx.push_back(i);
    }
    long long combos = 1;
    for (size_t i = 0; i < free_idx.size(); i++) {
        combos *= (T + 1);
        if (combos > 100'000'000LL) throw Error("derandomizer: too many unfixed centers near an edge");
    }
    long long crossing = 0;
    for (long long it = 0; it < combos; it++) {
        long long rem = it;
        for (int i : free_idx) { times[i] = (int)(rem % (T + 1)); rem /= (T + 1); }
        int wu = winner(e.du, e.centers, times);
        int wv = winner(e.dv, e.centers, times);
        if (wu != wv) crossing++;
    }
    return (double)crossing / (double)combos;
}

} // namespace

DerandResult derandomized_start_times(const Graph& g, int R) {
    if (R < 1) throw Error("derandomized_start_times requires integer R >= 1");
    int T = R / 10;
    auto centers = mis_power_graph(g, R, MisStrategy::GreedyId);
    int k = (int)centers.size();
    int horizon = (int)std::floor(2.2 * R + 1);
    int reach = R + T; // a center farther than this from a vertex can never win it

    // distances from each center out to the horizon
    std::vector<std::vector<int>> cdist(k);
    for (int i = 0; i < k; i++) cdist[i] = bfs_distances_bounded(g, centers[i], std::max(horizon, reach));

    // competing-centers graph G*: centers adjacent iff hop distance <= 2.2R+1
    std::vector<std::vector<int>> gstar(k);
    for (int i = 0; i < k; i++)
        for (int j = 0; j < k; j++)
            if (j != i && cdist[i][centers[j]] >= 0 && cdist[i][centers[j]] <= horizon)
                gstar[i].push_back(j);

    // greedy coloring by center id with deg(G*)+1 colors
    std::vector<int> color(k, -1);
    for (int i = 0; i < k; i++) {
        std::set<int> used;
        for (int j : gstar[i])
            if (color[j] >= 0) used.insert(color[j]);
        int c = 0;
        while (used.count(c)) c++;
        color[i] = c;
    }

    // per-edge scenes (relevant centers = within R+T of either endpoint)
    std::vector<EdgeScene> scenes;
    std::vector<std::vector<int>> touching(k); // center index -> scene indices
    for (int u = 0; u < g.n; u++) {
        for (int v : g.adjacency[u]) {
            if (v < u) continue;
            EdgeScene e;
            e.u = u; e.v = v;
            for (int i = 0; i < k; i++) {
                int du = cdist[i][u], dv = cdist[i][v];
                bool ru = du >= 0 && du <= reach;
                bool rv = dv >= 0 && dv <= reach;
                if (ru || rv) {
                    e.centers.push_back(i); // store center index; ids compared via centers[]
                    e.du.push_back(ru ? du : -1);
                    e.dv.push_back(rv ? dv : -1);
                }
            }
            // translate stored indices to ids for tie-breaking
            int idx = (int)scenes.size();
            for (int i : e.centers) touching[i].push_back(idx);
            scenes.push_back(std::move(e));
        }
    }
    // scene.centers currently holds center indices; winner() breaks ties by
    // the value stored there, and index order equals id order, so this is
    // consistent; convert to ids anyway for clarity.
    std::map<int, int> index_of_center;
    for (int i = 0; i < k; i++) index_of_center[centers[i]] = i;

    auto total_expectation = [&](const std::map<int, int>& fixed) {
        double sum = 0;
        for (const auto& e : scenes) sum += edge_crossing_probability(e, fixed, T);
        return sum;
    };

    DerandResult out;
    std::map<int, int> fixed; // keyed by center *index*
    out.initial_expectation = total_expectation(fixed);
    out.expectation_steps.push_back(out.initial_expectation);

    // process color classes in increasing color; inside a class by id
    int max_color = 0;
    for (int c : color) max_color = std::max(max_color, c);
    for (int c = 0; c <= max_color; c++) {
        for (int i = 0; i < k; i++) {
            if (color[i] != c) continue;
            // choose t minimizing the conditional expectation over scenes i touches
            int best_t = 0;
            double best_val = 0;
            for (int t = 0; t <= T; t++) {
                fixed[i] = t;
                double val = 0;
                for (int sidx : touching[i]) val += edge_crossing_probability(scenes[sidx], fixed, T);
                if (t == 0 || val < best_val) { best_val = val; best_t = t; }
            }
            fixed[i] = best_t;
            out.expectation_steps.push_back(total_expectation(fixed));
        }
    }
    std::map<int, int> start;
    for (int i = 0; i < k; i++) {
        auto it = fixed.find(i);
        start[centers[i]] = it == fixed.end() ? 0 : it->second;
    }
    out.start_times = start;
    out.clustering = start_time_voronoi(g, centers, start, R);
    long long crossings = 0;
    for (int u = 0; u < g.n; u++)
        for (int v : g.adjacency[u])
            if (u < v && out.clustering.center_of[u] != out.clustering.center_of[v]) crossings++;
    out.final_crossings = crossings;
    return out;
}

} // namespace core
