#ifndef CORE_IO_HPP
#define CORE_IO_HPP

#include "core/clustering.hpp"
#include "core/graph.hpp"

#include <iosfwd>
#include <string>

namespace core {

// Edge-list text format: first line "n m", then m lines "u v" (0-based),
// then optionally "coords k_geo" followed by n lines of k_geo reals.
// Writers emit edges with u < v, sorted lexicographically.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Clustering file format: header "clustering R", then n lines
// "v center depth parent". Round-trips losslessly.
Clustering read_clustering(std::istream& in);
Clustering read_clustering_file(const std::string& path);
void write_clustering(std::ostream& out, const Clustering& c);
void write_clustering_file(const std::string& path, const Clustering& c);

} // namespace core

#endif
