#ifndef CORE_GRAPH_HPP
#define CORE_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace core {

// Undirected, simple, connected graph with optional vertex coordinates.
// Immutable after construction (all operations take it by const reference).
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adjacency; // per-vertex sorted neighbor lists
    std::vector<int> ids;                    // distinct integer identifiers, default 0..n-1
    std::vector<std::vector<double>> coords; // optional, one vector per vertex
    int k_geo = 0;                           // coordinate dimension (0 = no coords)

    int m() const {
        long long deg = 0;
        for (const auto& a : adjacency) deg += (long long)a.size();
        return (int)(deg / 2);
    }
    int max_degree() const {
        size_t d = 0;
        for (const auto& a : adjacency) d = std::max(d, a.size());
        return (int)d;
    }
    bool has_edge(int u, int v) const;
    int diameter() const; // computed on demand via all-source BFS
};

// Build a graph from an edge list; sorts adjacency, rejects self-loops and
// duplicate edges, and (by default) rejects disconnected input.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                 bool require_connected = true);

// Structural validity check (symmetry, sortedness, no loops/parallels,
// distinct ids, connectivity). Throws on violation.
void validate_graph(const Graph& g);

bool is_connected(const Graph& g);

// Exact hop distances from `source`; throws DisconnectedGraph if any vertex
// is unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

// BFS truncated at depth `limit`; unreachable-within-limit vertices get -1.
// Does not require global connectivity knowledge (used for power-graph views).
std::vector<int> bfs_distances_bounded(const Graph& g, int source, int limit);

// B_r(v) = vertices at hop distance <= r, in increasing vertex order.
std::vector<int> ball(const Graph& g, int v, int r);

// G^{<=R}: same vertices, edge {u,v} iff 1 <= d_G(u,v) <= R. Materialized.
Graph power_graph(const Graph& g, int R);

// Maximum size of a G^{<=R}-independent subset of the radius-(r*R) ball
// around v. Exact branch-and-bound when the ball has <= exact_cap vertices,
// otherwise a greedy lower bound; *exact (if non-null) reports which.
int estimate_independence(const Graph& g, int R, int r, int v, int exact_cap,
                          bool* exact = nullptr);

// alpha-density check on a grid discretization of the coordinate bounding
// box with spacing <= 1/(2*alpha): every grid point that lies inside the
// convex hull must have a vertex within 1/alpha. Sufficient (not exact).
bool check_density(const Graph& g, double alpha);

// Length of the shortest cycle; -1 for forests.
int girth(const Graph& g);

// Iterated base-2 logarithm: applications of log2 until the value is <= 1.
int log_star(double n);

} // namespace core

#endif
