#include "core/generators.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace core {

Graph gen_cycle(int n) {
    if (n < 3) throw Error("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; i++) edges.push_back({i, (i + 1) % n});
    return make_graph(n, edges);
}

Graph gen_path(int n) {
    if (n < 1) throw Error("path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; i++) edges.push_back({i, i + 1});
    return make_graph(n, edges);
}

Graph gen_grid(const std::vector<int>& dims, bool torus) {
    if (dims.empty()) throw Error("grid requires at least one dimension");
    long long n = 1;
    for (int d : dims) {
        if (d < 1) throw Error("grid dimensions must be >= 1");
        n *= d;
        if (n > 50'000'000) throw Error("grid too large");
    }
    int k = (int)dims.size();
    // row-major strides: last dimension varies fastest
    std::vector<long long> stride(k);
    stride[k - 1] = 1;
    for (int d = k - 2; d >= 0; d--) stride[d] = stride[d + 1] * dims[d + 1];
    std::set<std::pair<int, int>> edges;
    std::vector<int> coord(k, 0);
    for (long long v = 0; v < n; v++) {
        long long rem = v;
        for (int d = 0; d < k; d++) { coord[d] = (int)(rem / stride[d]); rem %= stride[d]; }
        for (int d = 0; d < k; d++) {
            if (coord[d] + 1 < dims[d]) {
                edges.insert({(int)v, (int)(v + stride[d])});
            } else if (torus && dims[d] > 1) {
                int u = (int)(v - (long long)(dims[d] - 1) * stride[d]);
                int a = std::min((int)v, u), b = std::max((int)v, u);
                edges.insert({a, b}); // side-2 torus collapses to a single edge
            }
        }
    }
    return make_graph((int)n, {edges.begin(), edges.end()});
}

Graph gen_comb(int rows, int cols) {
    if (rows < 0 || cols < 1) throw Error("comb requires rows >= 0 and cols >= 1");
    int n = cols * (rows + 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < cols; i++) edges.push_back({i, i + 1});
    // tooth j of spine vertex i: vertices cols + i*rows .. cols + i*rows + rows-1
    for (int i = 0; i < cols; i++) {
        int prev = i;
        for (int j = 0; j < rows; j++) {
            int t = cols + i * rows + j;
            edges.push_back({prev, t});
            prev = t;
        }
    }
    return make_graph(n, edges);
}

Graph gen_random_geometric(int n, int k_geo, double radius, uint64_t seed, int max_retries) {
    if (n < 1 || k_geo < 1) throw Error("geometric graph requires n >= 1 and k_geo >= 1");
    if (radius <= 0) throw Error("geometric graph requires radius > 0");
    double side = std::pow((double)n, 1.0 / k_geo); // cube of volume n
    for (int attempt = 0; attempt < max_retries; attempt++) {
        Rng rng(hash_combine(seed, (uint64_t)attempt));
        std::vector<std::vector<double>> pts(n, std::vector<double>(k_geo));
        for (int i = 0; i < n; i++)
            for (int d = 0; d < k_geo; d++) pts[i][d] = rng.next_double() * side;
        std::vector<std::pair<int, int>> edges;
        double r2 = radius * radius;
        for (int u = 0; u < n; u++) {
            for (int v = u + 1; v < n; v++) {
                double s = 0;
                for (int d = 0; d < k_geo; d++) s += (pts[u][d] - pts[v][d]) * (pts[u][d] - pts[v][d]);
                if (s <= r2) edges.push_back({u, v});
            }
        }
        Graph g = make_graph(n, edges, /*require_connected=*/false);
        if (!is_connected(g)) continue;
        // normalize so the edge threshold is 1
        for (auto& p : pts)
            for (double& x : p) x /= radius;
        g.coords = std::move(pts);
        g.k_geo = k_geo;
        return g;
    }
    throw CouldNotConnect();
}

Graph gen_random_regular(int n, int d, uint64_t seed, int max_retries) {
    if (d < 3) throw Error("random regular generator requires d >= 3");
    if ((long long)n * d % 2 != 0) throw Error("n*d must be even");
    if (d >= n) throw Error("d must be less than n");
    for (int attempt = 0; attempt < max_retries; attempt++) {
        Rng rng(hash_combine(seed, (uint64_t)attempt));
        // pairing model: n*d half-edge stubs, uniformly matched
        std::vector<int> stubs;
        stubs.reserve((size_t)n * d);
        for (int v = 0; v < n; v++)
            for (int i = 0; i < d; i++) stubs.push_back(v);
        for (size_t i = stubs.size(); i > 1; i--) {
            size_t j = (size_t)rng.next_below(i);
            std::swap(stubs[i - 1], stubs[j]);
        }
        bool ok = true;
        std::set<std::pair<int, int>> seen;
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) { ok = false; break; }
            auto key = std::minmax(u, v);
            if (!seen.insert({key.first, key.second}).second) { ok = false; break; }
            edges.push_back(key);
        }
        if (!ok) continue;
        Graph g = make_graph(n, edges, /*require_connected=*/false);
        if (!is_connected(g)) continue;
        return g;
    }
    throw GenerationFailure();
}

} // namespace core
