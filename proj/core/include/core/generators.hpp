#ifndef CORE_GENERATORS_HPP
#define CORE_GENERATORS_HPP

#include "core/graph.hpp"

#include <cstdint>
#include <vector>

namespace core {

Graph gen_cycle(int n);                 // n >= 3
Graph gen_path(int n);                  // n >= 1

// Row-major vertex ids; torus wraps every dimension. Duplicate edges that
// arise from side-2 wraparound are collapsed (the graph stays simple).
Graph gen_grid(const std::vector<int>& dims, bool torus);

// Spine path of `cols` vertices (ids 0..cols-1); a tooth path of `rows`
// vertices hangs off each spine vertex. rows = 0 degenerates to a path.
Graph gen_comb(int rows, int cols);

// n points uniform in the cube of volume n in R^k_geo; edge iff Euclidean
// distance <= radius. Coordinates are rescaled by 1/radius afterwards so the
// stored edge threshold is 1. Resamples until connected (bounded retries).
Graph gen_random_geometric(int n, int k_geo, double radius, uint64_t seed,
                           int max_retries = 100);

// Simple d-regular graph via the pairing model with whole-graph rejection
// of loops and parallel edges; also rejects disconnected outcomes.
Graph gen_random_regular(int n, int d, uint64_t seed, int max_retries = 1000);

} // namespace core

#endif
