#include "core/graph.hpp"
#include "core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace core {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adjacency[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::diameter() const {
    int d = 0;
    for (int s = 0; s < n; s++) {
        auto dist = bfs_distances(*this, s);
        for (int x : dist) d = std::max(d, x);
    }
    return d;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                 bool require_connected) {
    if (n <= 0) throw Error("graph must have at least one vertex");
    Graph g;
    g.n = n;
    g.adjacency.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error("edge endpoint out of range");
        if (u == v) throw Error("self-loops are not allowed");
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) throw Error("parallel edges are not allowed");
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
    g.ids.resize(n);
    for (int i = 0; i < n; i++) g.ids[i] = i;
    if (require_connected && !is_connected(g)) throw DisconnectedGraph();
    return g;
}

void validate_graph(const Graph& g) {
    if (g.n <= 0 || (int)g.adjacency.size() != g.n) throw Error("bad vertex count");
    if ((int)g.ids.size() != g.n) throw Error("ids must be given for every vertex");
    std::set<int> idset(g.ids.begin(), g.ids.end());
    if ((int)idset.size() != g.n) throw Error("ids must be pairwise distinct");
    for (int u = 0; u < g.n; u++) {
        const auto& a = g.adjacency[u];
        if (!std::is_sorted(a.begin(), a.end())) throw Error("adjacency lists must be sorted");
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw Error("parallel edges are not allowed");
        for (int v : a) {
            if (v < 0 || v >= g.n) throw Error("neighbor out of range");
            if (v == u) throw Error("self-loops are not allowed");
            if (!g.has_edge(v, u)) throw Error("adjacency must be symmetric");
        }
    }
    if (!g.coords.empty()) {
        if ((int)g.coords.size() != g.n) throw Error("coords must be given for every vertex");
        for (const auto& c : g.coords)
            if ((int)c.size() != g.k_geo) throw Error("coordinate dimension mismatch");
    }
    if (!is_connected(g)) throw DisconnectedGraph();
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front(); q.pop();
        for (int v : g.adjacency[u]) {
            if (!seen[v]) { seen[v] = 1; count++; q.push(v); }
        }
    }
    return count == g.n;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.n) throw Error("source out of range");
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front(); q.pop();
        for (int v : g.adjacency[u]) {
            if (dist[v] < 0) { dist[v] = dist[u] + 1; q.push(v); }
        }
    }
    for (int v = 0; v < g.n; v++)
        if (dist[v] < 0) throw DisconnectedGraph();
    return dist;
}

std::vector<int> bfs_distances_bounded(const Graph& g, int source, int limit) {
    std::vector<int> dist(g.n, -1);
    if (limit < 0) return dist;
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front(); q.pop();
        if (dist[u] == limit) continue;
        for (int v : g.adjacency[u]) {
            if (dist[v] < 0) { dist[v] = dist[u] + 1; q.push(v); }
        }
    }
    return dist;
}

std::vector<int> ball(const Graph& g, int v, int r) {
    if (r < 0) throw Error("ball radius must be nonnegative");
    auto dist = bfs_distances_bounded(g, v, r);
    std::vector<int> out;
    for (int u = 0; u < g.n; u++)
        if (dist[u] >= 0) out.push_back(u);
    return out;
}

Graph power_graph(const Graph& g, int R) {
    if (R < 1) throw Error("power graph requires R >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; u++) {
        auto dist = bfs_distances_bounded(g, u, R);
        for (int v = u + 1; v < g.n; v++)
            if (dist[v] >= 1) edges.push_back({u, v});
    }
    Graph p = make_graph(g.n, edges, /*require_connected=*/false);
    p.coords = g.coords;
    p.k_geo = g.k_geo;
    return p;
}

namespace {

// Exact maximum independent set size by branch and bound on an explicit
// adjacency structure over `active` vertices.
struct MisBnB {
    const std::vector<std::vector<int>>& adj; // indices into 0..k-1
    int best = 0;

    explicit MisBnB(const std::vector<std::vector<int>>& a) : adj(a) {}

    void solve(std::vector<char>& active, int active_count, int current) {
        if (current + active_count <= best) return;
        // find active vertex of maximum active-degree
        int pivot = -1, pivot_deg = -1;
        for (int u = 0; u < (int)adj.size(); u++) {
            if (!active[u]) continue;
            int d = 0;
            for (int v : adj[u]) d += active[v];
            if (d > pivot_deg) { pivot = u; pivot_deg = d; }
        }
        if (pivot < 0) { best = std::max(best, current); return; }
        if (pivot_deg == 0) { best = std::max(best, current + active_count); return; }
        // branch 1: include pivot, drop its closed neighborhood
        std::vector<int> removed;
        active[pivot] = 0; removed.push_back(pivot);
        for (int v : adj[pivot])
            if (active[v]) { active[v] = 0; removed.push_back(v); }
        solve(active, active_count - (int)removed.size(), current + 1);
        for (int v : removed) active[v] = 1;
        // branch 2: exclude pivot
        active[pivot] = 0;
        solve(active, active_count - 1, current);
        active[pivot] = 1;
    }
};

} // namespace

int estimate_independence(const Graph& g, int R, int r, int v, int exact_cap, bool* exact) {
    if (R < 1 || r < 1) throw Error("estimate_independence requires R >= 1 and r >= 1");
    long long radius = (long long)r * R;
    auto members = ball(g, v, (int)std::min<long long>(radius, g.n));
    int k = (int)members.size();
    // pairwise hop distances inside the ball (bounded BFS from each member)
    std::vector<std::vector<int>> adj(k);
    std::vector<int> index_of(g.n, -1);
    for (int i = 0; i < k; i++) index_of[members[i]] = i;
    for (int i = 0; i < k; i++) {
        auto dist = bfs_distances_bounded(g, members[i], R);
        for (int j = 0; j < k; j++) {
            if (j != i && dist[members[j]] >= 1) adj[i].push_back(j);
        }
    }
    if (k <= exact_cap) {
        MisBnB bnb(adj);
        std::vector<char> active(k, 1);
        bnb.solve(active, k, 0);
        if (exact) *exact = true;
        return bnb.best;
    }
    // greedy-by-id lower bound
    if (exact) *exact = false;
    std::vector<char> blocked(k, 0);
    int count = 0;
    for (int i = 0; i < k; i++) {
        if (blocked[i]) continue;
        count++;
        for (int j : adj[i]) blocked[j] = 1;
    }
    return count;
}

namespace {

// 2D convex hull (monotone chain), returns hull in counterclockwise order.
std::vector<std::vector<double>> hull2d(std::vector<std::vector<double>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    int k = (int)pts.size();
    if (k <= 2) return pts;
    auto cross = [](const std::vector<double>& o, const std::vector<double>& a, const std::vector<double>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<std::vector<double>> h(2 * k);
    int m = 0;
    for (int i = 0; i < k; i++) {
        while (m >= 2 && cross(h[m - 2], h[m - 1], pts[i]) <= 0) m--;
        h[m++] = pts[i];
    }
    int lower = m + 1;
    for (int i = k - 2; i >= 0; i--) {
        while (m >= lower && cross(h[m - 2], h[m - 1], pts[i]) <= 0) m--;
        h[m++] = pts[i];
    }
    h.resize(m - 1);
    return h;
}

bool point_in_hull2d(const std::vector<std::vector<double>>& hull, double x, double y, double eps) {
    int k = (int)hull.size();
    if (k == 0) return false;
    if (k == 1) return std::hypot(x - hull[0][0], y - hull[0][1]) <= eps;
    if (k == 2) {
        // distance to segment
        double ax = hull[0][0], ay = hull[0][1], bx = hull[1][0], by = hull[1][1];
        double len2 = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
        double t = len2 > 0 ? ((x - ax) * (bx - ax) + (y - ay) * (by - ay)) / len2 : 0;
        t = std::clamp(t, 0.0, 1.0);
        return std::hypot(x - (ax + t * (bx - ax)), y - (ay + t * (by - ay))) <= eps;
    }
    for (int i = 0; i < k; i++) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % k];
        double c = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
        if (c < -eps) return false;
    }
    return true;
}

} // namespace

bool check_density(const Graph& g, double alpha) {
    if (g.coords.empty()) throw MissingCoordinates();
    if (alpha <= 0) throw Error("alpha must be positive");
    int k = g.k_geo;
    double radius = 1.0 / alpha;     // a ball of this radius must contain a vertex
    double spacing = 1.0 / (2 * alpha);
    // bounding box
    std::vector<double> lo(k, 1e300), hi(k, -1e300);
    for (const auto& c : g.coords)
        for (int d = 0; d < k; d++) { lo[d] = std::min(lo[d], c[d]); hi[d] = std::max(hi[d], c[d]); }
    std::vector<int> steps(k);
    long long total = 1;
    for (int d = 0; d < k; d++) {
        steps[d] = (int)std::floor((hi[d] - lo[d]) / spacing) + 1;
        total *= steps[d];
        if (total > 50'000'000) throw Error("density grid too large for this alpha/extent");
    }
    std::vector<std::vector<double>> hull;
    if (k == 2) hull = hull2d(g.coords);
    std::vector<int> idx(k, 0);
    std::vector<double> p(k);
    for (long long it = 0; it < total; it++) {
        long long rem = it;
        for (int d = 0; d < k; d++) {
            idx[d] = (int)(rem % steps[d]);
            rem /= steps[d];
            p[d] = std::min(lo[d] + idx[d] * spacing, hi[d]);
        }
        // restrict to the convex hull where we can test it exactly (k <= 2);
        // for k >= 3 the whole bounding box is tested (stricter, sufficient).
        if (k == 2 && !point_in_hull2d(hull, p[0], p[1], 1e-9)) continue;
        double best = 1e300;
        for (const auto& c : g.coords) {
            double s = 0;
            for (int d = 0; d < k; d++) s += (c[d] - p[d]) * (c[d] - p[d]);
            best = std::min(best, s);
        }
        if (std::sqrt(best) > radius + 1e-12) return false;
    }
    return true;
}

int girth(const Graph& g) {
    int best = -1;
    for (int s = 0; s < g.n; s++) {
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front(); q.pop();
            for (int v : g.adjacency[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

int log_star(double n) {
    if (n < 1) throw Error("log_star requires n >= 1");
    int count = 0;
    double x = n;
    while (x > 1) {
        x = std::log2(x);
        count++;
    }
    return count;
}

} // namespace core
