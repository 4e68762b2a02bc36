#include "core/optimize.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace core {

namespace {

// ---------------------------------------------------------------------------
// path / cycle recognition (canonical orders for deterministic DP solutions)

std::vector<int> path_order(const Graph& g) {
    if (g.n == 1) return {0};
    int deg1 = 0, start = -1;
    for (int v = 0; v < g.n; v++) {
        size_t deg = g.adjacency[v].size();
        if (deg > 2) return {};
        if (deg == 1) {
            deg1++;
            if (start < 0) start = v;
        }
    }
    if (deg1 != 2) return {};
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while ((int)order.size() < g.n) {
        int nxt = -1;
        for (int u : g.adjacency[cur])
            if (u != prev) { nxt = u; break; }
        if (nxt < 0) return {};
        order.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return order;
}

std::vector<int> cycle_order(const Graph& g) {
    if (g.n < 3) return {};
    for (int v = 0; v < g.n; v++)
        if (g.adjacency[v].size() != 2) return {};
    std::vector<int> order{0};
    int prev = 0, cur = g.adjacency[0][0]; // canonical direction: smaller neighbor
    order.push_back(cur);
    while ((int)order.size() < g.n) {
        int nxt = g.adjacency[cur][0] == prev ? g.adjacency[cur][1] : g.adjacency[cur][0];
        order.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return order;
}

// ---------------------------------------------------------------------------
// exact matching: augmenting paths with blossom contraction, O(V^3)

class Blossom {
public:
    explicit Blossom(const Graph& g) : g_(g), n_(g.n) {
        match_.assign(n_, -1);
        for (int v = 0; v < n_; v++) {
            if (match_[v] != -1) continue;
            int u = find_path(v);
            while (u != -1) {
                int pv = p_[u], ppv = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = ppv;
            }
        }
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < n_; v++)
            if (match_[v] > v) out.push_back({v, match_[v]});
        return out;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        while (true) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] == -1) break;
            a = p_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = p_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    int find_path(int root) {
        used_.assign(n_, 0);
        p_.assign(n_, -1);
        base_.resize(n_);
        for (int i = 0; i < n_; i++) base_[i] = i;
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.adjacency[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
                    int curbase = lca(v, to);
                    in_blossom_.assign(n_, 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n_; i++) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = curbase;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (p_[to] == -1) {
                    p_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, p_, base_;
    std::vector<char> used_, in_blossom_;
};

// ---------------------------------------------------------------------------
// MIS / max-cut: DP on paths and cycles, branch and bound otherwise

std::vector<int> mis_from_order(const std::vector<int>& order, bool cycle) {
    int L = (int)order.size();
    std::vector<int> out;
    int limit = cycle && L % 2 == 1 ? L - 3 : L - 1;
    for (int i = 0; i <= limit; i += 2) out.push_back(order[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> mis_bnb(const Graph& g, int cap) {
    if (g.n > cap)
        throw InstanceTooLarge("exact_mis: " + std::to_string(g.n) + " vertices exceed the cap " +
                               std::to_string(cap));
    if (g.n > 64) throw InstanceTooLarge("exact_mis branch and bound is limited to 64 vertices");
    int n = g.n;
    std::vector<uint64_t> nb(n, 0);
    for (int v = 0; v < n; v++)
        for (int u : g.adjacency[v]) nb[v] |= 1ull << u;
    uint64_t best_set = 0;
    int best = -1;
    auto rec = [&](auto&& self, uint64_t mask, uint64_t cur, int cnt) -> void {
        if (cnt + __builtin_popcountll(mask) <= best) return;
        if (mask == 0) {
            best = cnt;
            best_set = cur;
            return;
        }
        int v = -1, vd = -1;
        for (uint64_t m = mask; m;) {
            int x = __builtin_ctzll(m);
            m &= m - 1;
            int d = __builtin_popcountll(nb[x] & mask);
            if (d > vd) { vd = d; v = x; }
        }
        if (vd == 0) { // all remaining vertices are isolated in the mask
            if (cnt + __builtin_popcountll(mask) > best) {
                best = cnt + __builtin_popcountll(mask);
                best_set = cur | mask;
            }
            return;
        }
        self(self, mask & ~(nb[v] | (1ull << v)), cur | (1ull << v), cnt + 1);
        self(self, mask & ~(1ull << v), cur, cnt);
    };
    uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
    rec(rec, full, 0, 0);
    std::vector<int> out;
    for (int v = 0; v < n; v++)
        if (best_set >> v & 1) out.push_back(v);
    return out;
}

std::pair<std::vector<char>, long long> maxcut_from_order(const std::vector<int>& order,
                                                          bool cycle) {
    int L = (int)order.size();
    std::vector<char> side(L, 0);
    for (int i = 0; i < L; i++) side[order[i]] = (char)(i % 2);
    long long value = cycle ? (L % 2 == 0 ? L : L - 1) : L - 1;
    return {side, value};
}

std::pair<std::vector<char>, long long> maxcut_bnb(const Graph& g, int cap) {
    if (g.n > cap)
        throw InstanceTooLarge("exact_maxcut: " + std::to_string(g.n) +
                               " vertices exceed the cap " + std::to_string(cap));
    int n = g.n;
    // undecided[i] = edges whose larger endpoint is >= i
    std::vector<long long> undecided(n + 1, 0);
    for (int v = 0; v < n; v++)
        for (int u : g.adjacency[v])
            if (u > v) undecided[u]++; // decided once vertex u is assigned
    for (int i = n - 1; i >= 0; i--) undecided[i] += undecided[i + 1];
    std::vector<char> side(n, 0), best_side(n, 0);
    long long best = -1;
    auto rec = [&](auto&& self, int i, long long cut) -> void {
        if (i == n) {
            if (cut > best) {
                best = cut;
                best_side = side;
            }
            return;
        }
        for (char s = 0; s <= (i == 0 ? 0 : 1); s++) {
            side[i] = s;
            long long gained = 0;
            for (int u : g.adjacency[i])
                if (u < i && side[u] != s) gained++;
            if (cut + gained + undecided[i + 1] <= best) continue;
            self(self, i + 1, cut + gained);
        }
    };
    rec(rec, 0, 0);
    return {best_side, best};
}

// dispatchers preferring the linear DP shapes
std::vector<std::pair<int, int>> solve_matching(const Graph& g) {
    auto po = path_order(g);
    auto co = po.empty() ? cycle_order(g) : std::vector<int>{};
    const std::vector<int>& order = po.empty() ? co : po;
    if (!order.empty()) {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i + 1 < (int)order.size(); i += 2) {
            int a = order[i], b = order[i + 1];
            out.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    return Blossom(g).edges();
}

std::vector<int> solve_mis(const Graph& g, int cap) {
    auto po = path_order(g);
    if (!po.empty()) return mis_from_order(po, false);
    auto co = cycle_order(g);
    if (!co.empty()) return mis_from_order(co, true);
    return mis_bnb(g, cap);
}

std::pair<std::vector<char>, long long> solve_maxcut(const Graph& g, int cap) {
    auto po = path_order(g);
    if (!po.empty()) return maxcut_from_order(po, false);
    auto co = cycle_order(g);
    if (!co.empty()) return maxcut_from_order(co, true);
    return maxcut_bnb(g, cap);
}

// ---------------------------------------------------------------------------
// induced subgraphs

struct Induced {
    Graph graph;
    std::vector<int> to_global;
};

Induced induce(const Graph& g, const std::vector<int>& members) {
    Induced out;
    out.to_global = members;
    std::map<int, int> local;
    for (int i = 0; i < (int)members.size(); i++) local[members[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int u : members)
        for (int w : g.adjacency[u]) {
            if (w <= u) continue;
            auto it = local.find(w);
            if (it != local.end()) edges.push_back({local[u], it->second});
        }
    out.graph = make_graph((int)members.size(), edges, true);
    return out;
}

} // namespace

std::vector<std::pair<int, int>> exact_matching(const Graph& g) {
    return solve_matching(g);
}

std::vector<int> exact_mis(const Graph& g, int cap) {
    return solve_mis(g, cap);
}

std::pair<std::vector<char>, long long> exact_maxcut(const Graph& g, int cap) {
    return solve_maxcut(g, cap);
}

namespace {

// ---------------------------------------------------------------------------
// union pipeline: solve every cluster exactly, drop crossing edges

void run_pipeline(const Graph& g, const Clustering& c, ApproxResult& r, int cap) {
    auto mem = c.members();
    switch (r.problem) {
        case Problem::Matching: {
            for (auto& [center, members] : mem) {
                Induced ind = induce(g, members);
                for (auto [a, b] : solve_matching(ind.graph))
                    r.edges.push_back({ind.to_global[a], ind.to_global[b]});
            }
            std::sort(r.edges.begin(), r.edges.end());
            r.value = (long long)r.edges.size();
            break;
        }
        case Problem::Mis: {
            std::set<int> chosen;
            for (auto& [center, members] : mem) {
                Induced ind = induce(g, members);
                try {
                    for (int a : solve_mis(ind.graph, cap)) chosen.insert(ind.to_global[a]);
                } catch (const InstanceTooLarge& e) {
                    throw InstanceTooLarge("cluster centered at " + std::to_string(center) +
                                           ": " + e.what());
                }
            }
            // fix-up: one endpoint removed per conflicting crossing edge
            for (int u = 0; u < g.n; u++)
                for (int v : g.adjacency[u]) {
                    if (v <= u || c.center_of[u] == c.center_of[v]) continue;
                    if (chosen.count(u) && chosen.count(v)) chosen.erase(std::max(u, v));
                }
            r.vertex_set.assign(chosen.begin(), chosen.end());
            r.value = (long long)r.vertex_set.size();
            break;
        }
        case Problem::MaxCut: {
            r.side.assign(g.n, 0);
            for (auto& [center, members] : mem) {
                Induced ind = induce(g, members);
                try {
                    auto [side, value] = solve_maxcut(ind.graph, cap);
                    for (int i = 0; i < (int)members.size(); i++)
                        r.side[ind.to_global[i]] = side[i];
                } catch (const InstanceTooLarge& e) {
                    throw InstanceTooLarge("cluster centered at " + std::to_string(center) +
                                           ": " + e.what());
                }
            }
            for (int u = 0; u < g.n; u++)
                for (int v : g.adjacency[u])
                    if (v > u && r.side[u] != r.side[v]) r.edges.push_back({u, v});
            r.value = (long long)r.edges.size();
            break;
        }
    }
}

std::optional<long long> reference_opt(Problem p, const Graph& g) {
    auto po = path_order(g);
    auto co = po.empty() ? cycle_order(g) : std::vector<int>{};
    bool linear = !po.empty() || !co.empty();
    switch (p) {
        case Problem::Matching:
            if (linear) return g.n / 2;
            if (g.n <= 2000) return (long long)Blossom(g).edges().size();
            return std::nullopt;
        case Problem::Mis:
            if (!po.empty()) return (g.n + 1) / 2;
            if (!co.empty()) return g.n / 2;
            if (g.n <= 48) return (long long)mis_bnb(g, 48).size();
            return std::nullopt;
        case Problem::MaxCut:
            if (!po.empty()) return g.n - 1;
            if (!co.empty()) return g.n % 2 == 0 ? g.n : g.n - 1;
            if (g.n <= 24) return maxcut_bnb(g, 24).second;
            return std::nullopt;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// objective-aware derandomization by the method of conditional expectations

struct ClusterSol {
    std::vector<int> members;  // global ids, sorted
    std::set<int> chosen;      // MIS solution (global ids)
    std::vector<char> side;    // max-cut sides, indexed like members
    long long value = 0;
};

struct Derand {
    const Graph& g;
    Problem problem;
    int R, T, reach;
    std::vector<int> centers;
    int k = 0;
    std::vector<std::vector<int>> cdist;         // center -> bounded distances
    std::vector<std::vector<int>> near;          // vertex -> center indices within reach
    std::vector<std::vector<int>> near_vertices; // center -> vertices within reach
    std::vector<std::vector<int>> cluster_deps;  // center -> center indices within 2*reach
    std::vector<int> fixed;                      // per center: start time or -1

    std::map<std::pair<int, std::vector<int>>, ClusterSol> cache;

    Derand(const Graph& gr, Problem p, int R_) : g(gr), problem(p), R(R_) {
        T = R / 10;
        reach = R + T;
        centers = mis_power_graph(g, R, MisStrategy::GreedyId);
        k = (int)centers.size();
        int bound = 3 * reach + 2;
        cdist.resize(k);
        near.assign(g.n, {});
        near_vertices.resize(k);
        for (int i = 0; i < k; i++) {
            cdist[i] = bfs_distances_bounded(g, centers[i], bound);
            for (int v = 0; v < g.n; v++)
                if (cdist[i][v] >= 0 && cdist[i][v] <= reach) {
                    near[v].push_back(i);
                    near_vertices[i].push_back(v);
                }
        }
        cluster_deps.resize(k);
        for (int i = 0; i < k; i++)
            for (int j = 0; j < k; j++) {
                int d = cdist[i][centers[j]];
                if (d >= 0 && d <= 2 * reach) cluster_deps[i].push_back(j);
            }
        fixed.assign(k, -1);
    }

    int winner(int v, const std::vector<int>& t_of) const {
        int best = -1;
        long long best_arr = 0;
        for (int ci : near[v]) {
            long long arr = t_of[ci] + cdist[ci][v];
            if (best < 0 || arr < best_arr || (arr == best_arr && centers[ci] < centers[best])) {
                best = ci;
                best_arr = arr;
            }
        }
        return best;
    }

    const ClusterSol& cluster_solution(int ci, const std::vector<int>& t_of) {
        std::vector<int> key;
        for (int j : cluster_deps[ci]) key.push_back(t_of[j]);
        auto ck = std::make_pair(ci, std::move(key));
        auto it = cache.find(ck);
        if (it != cache.end()) return it->second;
        ClusterSol sol;
        for (int v : near_vertices[ci])
            if (winner(v, t_of) == ci) sol.members.push_back(v);
        if (!sol.members.empty()) {
            Induced ind = induce(g, sol.members);
            switch (problem) {
                case Problem::Matching:
                    sol.value = (long long)solve_matching(ind.graph).size();
                    break;
                case Problem::Mis:
                    for (int a : solve_mis(ind.graph, 64)) sol.chosen.insert(ind.to_global[a]);
                    sol.value = (long long)sol.chosen.size();
                    break;
                case Problem::MaxCut: {
                    auto [side, value] = solve_maxcut(ind.graph, 64);
                    sol.side = side;
                    sol.value = value;
                    break;
                }
            }
        }
        return cache.emplace(std::move(ck), std::move(sol)).first->second;
    }

    char side_of(const ClusterSol& sol, int v) const {
        auto it = std::lower_bound(sol.members.begin(), sol.members.end(), v);
        return sol.side[it - sol.members.begin()];
    }

    // expected value of one term, averaging over the unfixed dependencies;
    // `extra` optionally pins one additional center
    template <typename Eval>
    double expect(const std::vector<int>& deps, int extra_center, int extra_t, Eval eval) {
        std::vector<int> t_of(k, -1);
        std::vector<int> open;
        for (int j : deps) {
            if (j == extra_center) t_of[j] = extra_t;
            else if (fixed[j] >= 0) t_of[j] = fixed[j];
            else open.push_back(j);
        }
        double combos = std::pow((double)(T + 1), (double)open.size());
        if (combos > 2e6)
            throw InstanceTooLarge("derandomization: too many interacting centers (" +
                                   std::to_string(open.size()) + ")");
        double total = 0;
        std::vector<int> idx(open.size(), 0);
        while (true) {
            for (size_t i = 0; i < open.size(); i++) t_of[open[i]] = idx[i];
            total += eval(t_of);
            size_t pos = 0;
            while (pos < open.size() && ++idx[pos] > T) idx[pos++] = 0;
            if (pos == open.size() && !open.empty()) break;
            if (open.empty()) break;
        }
        return total / combos;
    }

    double cluster_term(int ci, int extra_center, int extra_t) {
        return expect(cluster_deps[ci], extra_center, extra_t,
                      [&](const std::vector<int>& t_of) {
                          return (double)cluster_solution(ci, t_of).value;
                      });
    }

    std::vector<int> edge_deps(int u, int v) const {
        std::set<int> deps;
        std::set<int> anchors(near[u].begin(), near[u].end());
        anchors.insert(near[v].begin(), near[v].end());
        for (int ci : anchors)
            for (int j : cluster_deps[ci]) deps.insert(j);
        return {deps.begin(), deps.end()};
    }

    // MIS: -1 per crossing edge chosen on both sides; max-cut: +1 per
    // crossing edge whose endpoints land on opposite sides
    double edge_term(int u, int v, const std::vector<int>& deps, int extra_center, int extra_t) {
        return expect(deps, extra_center, extra_t, [&](const std::vector<int>& t_of) {
            int cu = winner(u, t_of), cv = winner(v, t_of);
            if (cu == cv) return 0.0;
            const ClusterSol& su = cluster_solution(cu, t_of);
            const ClusterSol& sv = cluster_solution(cv, t_of);
            if (problem == Problem::Mis)
                return su.chosen.count(u) && sv.chosen.count(v) ? -1.0 : 0.0;
            return side_of(su, u) != side_of(sv, v) ? 1.0 : 0.0;
        });
    }
};

struct DerandOutput {
    Clustering clustering;
    double initial_expectation = 0;
    std::vector<double> steps;
};

DerandOutput objective_derandomize(const Graph& g, Problem problem, int R) {
    Derand D(g, problem, R);
    DerandOutput out;

    struct EdgeTermRef {
        int u, v;
        std::vector<int> deps;
    };
    std::vector<EdgeTermRef> edge_terms;
    if (problem != Problem::Matching) {
        for (int u = 0; u < g.n; u++)
            for (int v : g.adjacency[u]) {
                if (v <= u) continue;
                if (D.near[u] == D.near[v] && D.near[u].size() == 1) continue; // never crossing
                edge_terms.push_back({u, v, D.edge_deps(u, v)});
            }
    }

    std::vector<double> cluster_e(D.k, 0);
    std::vector<double> edge_e(edge_terms.size(), 0);
    double total = 0;
    for (int i = 0; i < D.k; i++) {
        cluster_e[i] = D.cluster_term(i, -1, 0);
        total += cluster_e[i];
    }
    for (size_t e = 0; e < edge_terms.size(); e++) {
        edge_e[e] = D.edge_term(edge_terms[e].u, edge_terms[e].v, edge_terms[e].deps, -1, 0);
        total += edge_e[e];
    }
    out.initial_expectation = total;

    // affected terms per center
    std::vector<std::vector<int>> touch_cluster(D.k), touch_edge(D.k);
    for (int i = 0; i < D.k; i++)
        for (int j : D.cluster_deps[i]) touch_cluster[j].push_back(i);
    for (size_t e = 0; e < edge_terms.size(); e++)
        for (int j : edge_terms[e].deps) touch_edge[j].push_back((int)e);

    // greedy coloring of the interaction graph fixes the processing order
    std::vector<int> color(D.k, -1);
    for (int i = 0; i < D.k; i++) {
        std::set<int> seen;
        for (int j : D.cluster_deps[i])
            if (j != i && color[j] >= 0) seen.insert(color[j]);
        int c = 0;
        while (seen.count(c)) c++;
        color[i] = c;
    }
    std::vector<int> order(D.k);
    for (int i = 0; i < D.k; i++) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return color[a] < color[b]; });

    for (int ci : order) {
        int best_t = 0;
        double best_gain = 0;
        std::vector<double> new_cluster, new_edge;
        std::vector<double> best_cluster, best_edge;
        for (int t = 0; t <= D.T; t++) {
            new_cluster.clear();
            new_edge.clear();
            double gain = 0;
            for (int i : touch_cluster[ci]) {
                double e = D.cluster_term(i, ci, t);
                new_cluster.push_back(e);
                gain += e - cluster_e[i];
            }
            for (int e : touch_edge[ci]) {
                double val = D.edge_term(edge_terms[e].u, edge_terms[e].v, edge_terms[e].deps,
                                         ci, t);
                new_edge.push_back(val);
                gain += val - edge_e[e];
            }
            if (t == 0 || gain > best_gain + 1e-12) {
                best_t = t;
                best_gain = gain;
                best_cluster = new_cluster;
                best_edge = new_edge;
            }
        }
        D.fixed[ci] = best_t;
        for (size_t x = 0; x < touch_cluster[ci].size(); x++)
            cluster_e[touch_cluster[ci][x]] = best_cluster[x];
        for (size_t x = 0; x < touch_edge[ci].size(); x++)
            edge_e[touch_edge[ci][x]] = best_edge[x];
        total += best_gain;
        out.steps.push_back(total);
        if (!out.steps.empty() && total + 1e-9 <
            (out.steps.size() > 1 ? out.steps[out.steps.size() - 2] : out.initial_expectation))
            throw Error("conditional expectation decreased while fixing start times");
    }

    std::map<int, int> start;
    for (int i = 0; i < D.k; i++) start[D.centers[i]] = D.fixed[i];
    out.clustering = start_time_voronoi(g, D.centers, start, R);
    return out;
}

} // namespace

ApproxResult approx_solve(Problem problem, const Graph& g, double epsilon, ApproxMode mode,
                          uint64_t seed) {
    if (!(epsilon > 0 && epsilon < 1)) throw Error("approx_solve requires 0 < epsilon < 1");
    ApproxResult r;
    r.problem = problem;
    r.mode = mode;
    r.epsilon = epsilon;
    r.seed = seed;
    r.R = (int)std::ceil(4.0 / epsilon);
    if (mode == ApproxMode::Randomized) {
        r.clustering = mis_voronoi(g, r.R, StartTimes::Uniform, seed);
    } else {
        DerandOutput d = objective_derandomize(g, problem, r.R);
        r.clustering = std::move(d.clustering);
        r.initial_expectation = d.initial_expectation;
        r.expectation_steps = std::move(d.steps);
    }
    run_pipeline(g, r.clustering, r, 64);
    if (mode == ApproxMode::Derandomized && !r.expectation_steps.empty() &&
        (double)r.value + 1e-6 < r.expectation_steps.back())
        throw Error("derandomized value fell below its conditional expectation");
    r.opt_reference = reference_opt(problem, g);
    validate_approx(g, r);
    return r;
}

ApproxResult approx_solve_mpx(Problem problem, const Graph& g, double epsilon, uint64_t seed) {
    if (!(epsilon > 0 && epsilon < 1)) throw Error("approx_solve_mpx requires 0 < epsilon < 1");
    if (problem == Problem::MaxCut) throw Error("approx_solve_mpx supports matching and mis");
    ApproxResult r;
    r.problem = problem;
    r.mode = ApproxMode::Randomized;
    r.epsilon = epsilon;
    r.seed = seed;
    r.R = (int)std::ceil(4.0 / epsilon);
    MpxParams params;
    params.R = r.R;
    params.cutoff_mode = CutoffMode::LnR;
    r.clustering = mpx(g, params, seed);
    run_pipeline(g, r.clustering, r, 64);
    r.opt_reference = reference_opt(problem, g);
    validate_approx(g, r);
    return r;
}

void validate_approx(const Graph& g, const ApproxResult& r) {
    switch (r.problem) {
        case Problem::Matching: {
            std::set<int> touched;
            for (auto [u, v] : r.edges) {
                if (!g.has_edge(u, v)) throw Error("matching contains a non-edge");
                if (!touched.insert(u).second || !touched.insert(v).second)
                    throw Error("matching edges share an endpoint");
            }
            if (r.value != (long long)r.edges.size()) throw Error("matching value mismatch");
            break;
        }
        case Problem::Mis: {
            std::set<int> s(r.vertex_set.begin(), r.vertex_set.end());
            for (int u : r.vertex_set)
                for (int v : g.adjacency[u])
                    if (s.count(v)) throw Error("independent set contains an edge");
            if (r.value != (long long)r.vertex_set.size()) throw Error("mis value mismatch");
            break;
        }
        case Problem::MaxCut: {
            if ((int)r.side.size() != g.n) throw Error("cut bipartition size mismatch");
            long long recount = 0;
            for (int u = 0; u < g.n; u++)
                for (int v : g.adjacency[u])
                    if (v > u && r.side[u] != r.side[v]) recount++;
            if (recount != r.value) throw Error("cut value does not match its bipartition");
            break;
        }
    }
}

std::string problem_name(Problem p) {
    switch (p) {
        case Problem::Matching: return "matching";
        case Problem::Mis: return "mis";
        default: return "maxcut";
    }
}

std::string format_approx(const ApproxResult& r) {
    std::ostringstream os;
    os << "problem " << problem_name(r.problem) << '\n';
    os << "epsilon " << r.epsilon << '\n';
    os << "mode " << (r.mode == ApproxMode::Randomized ? "randomized" : "derandomized") << '\n';
    os << "seed " << r.seed << '\n';
    os << "R " << r.R << '\n';
    os << "value " << r.value << '\n';
    if (r.opt_reference) os << "opt " << *r.opt_reference << '\n';
    if (r.problem == Problem::Mis) {
        os << "vertices";
        for (int v : r.vertex_set) os << ' ' << v;
        os << '\n';
    } else {
        os << "edges";
        for (auto [u, v] : r.edges) os << ' ' << u << '-' << v;
        os << '\n';
    }
    if (r.problem == Problem::MaxCut) {
        os << "side";
        for (char s : r.side) os << ' ' << (int)s;
        os << '\n';
    }
    return os.str();
}

} // namespace core
