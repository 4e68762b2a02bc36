#include "core/io.hpp"
#include "core/errors.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace core {

Graph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw FormatError("edge list: expected header 'n m'");
    if (n < 1 || m < 0) throw FormatError("edge list: bad header values");
    std::vector<std::pair<int, int>> edges(m);
    for (int i = 0; i < m; i++) {
        if (!(in >> edges[i].first >> edges[i].second))
            throw FormatError("edge list: expected " + std::to_string(m) + " edges");
    }
    Graph g = make_graph(n, edges);
    std::string word;
    if (in >> word) {
        if (word != "coords") throw FormatError("edge list: unexpected trailing token '" + word + "'");
        int k;
        if (!(in >> k) || k < 1) throw FormatError("edge list: bad coords dimension");
        g.k_geo = k;
        g.coords.assign(n, std::vector<double>(k));
        for (int v = 0; v < n; v++)
            for (int d = 0; d < k; d++)
                if (!(in >> g.coords[v][d])) throw FormatError("edge list: missing coordinates");
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; u++)
        for (int v : g.adjacency[u])
            if (u < v) edges.push_back({u, v});
    std::sort(edges.begin(), edges.end());
    out << g.n << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    if (!g.coords.empty()) {
        out << "coords " << g.k_geo << '\n';
        out << std::setprecision(17);
        for (const auto& c : g.coords) {
            for (int d = 0; d < g.k_geo; d++) out << (d ? " " : "") << c[d];
            out << '\n';
        }
    }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write graph file: " + path);
    write_edge_list(out, g);
}

Clustering read_clustering(std::istream& in) {
    std::string word;
    if (!(in >> word) || word != "clustering") throw FormatError("clustering file: expected 'clustering R' header");
    Clustering c;
    if (!(in >> c.scale)) throw FormatError("clustering file: bad scale");
    int v, center, depth, parent;
    std::vector<std::array<int, 3>> rows;
    std::vector<int> order;
    while (in >> v >> center >> depth >> parent) {
        order.push_back(v);
        rows.push_back({center, depth, parent});
    }
    int n = (int)rows.size();
    if (n == 0) throw FormatError("clustering file: no rows");
    c.center_of.assign(n, -1);
    c.depth_of.assign(n, -1);
    c.parent_of.assign(n, -1);
    for (int i = 0; i < n; i++) {
        int u = order[i];
        if (u < 0 || u >= n || c.center_of[u] >= 0) throw FormatError("clustering file: bad or duplicate vertex row");
        c.center_of[u] = rows[i][0];
        c.depth_of[u] = rows[i][1];
        c.parent_of[u] = rows[i][2];
    }
    std::set<int> cs(c.center_of.begin(), c.center_of.end());
    c.centers.assign(cs.begin(), cs.end());
    for (int s : c.centers)
        if (s < 0 || s >= n || c.center_of[s] != s || c.depth_of[s] != 0 || c.parent_of[s] != s)
            throw FormatError("clustering file: inconsistent center rows");
    return c;
}

Clustering read_clustering_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open clustering file: " + path);
    return read_clustering(in);
}

void write_clustering(std::ostream& out, const Clustering& c) {
    double r = c.scale;
    out << "clustering ";
    if (r == (double)(long long)r) out << (long long)r;
    else out << std::setprecision(17) << r;
    out << '\n';
    for (int v = 0; v < (int)c.center_of.size(); v++)
        out << v << ' ' << c.center_of[v] << ' ' << c.depth_of[v] << ' ' << c.parent_of[v] << '\n';
}

void write_clustering_file(const std::string& path, const Clustering& c) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write clustering file: " + path);
    write_clustering(out, c);
}

} // namespace core
