#ifndef CORE_CLUSTER_OPS_HPP
#define CORE_CLUSTER_OPS_HPP

#include "core/clustering.hpp"
#include "core/graph.hpp"
#include "core/simkernel.hpp"

#include <vector>

namespace core {

// Per-vertex local view of its cluster, as a vertex program would hold it.
struct ClusterLocalView {
    int center_id = -1;
    int depth = 0;              // delta_v: hop distance to the center
    int parent_port = -1;       // port toward the parent; -1 for the center
    std::vector<int> child_ports;
    std::vector<int> boundary_ports; // ports toward neighbors in other clusters
    int d = 0;                  // known depth bound for this cluster
};

// Assemble consistent local views from a validated clustering.
// Throws InconsistentTreeView if the clustering's tree data is broken.
std::vector<ClusterLocalView> make_cluster_views(const Graph& g, const Clustering& c);

enum class ClusterOpKind { Downcast, Upcast, Intercast };

struct ClusterOpResult {
    SimRun run;
    // Downcast: every member outputs its center's state.
    // Upcast: every center outputs the sorted concatenation of member states.
    // Intercast: every boundary vertex outputs (neighbor id, state...) records.
    std::vector<std::vector<uint64_t>> outputs;
};

// Run one cluster operation (all clusters in parallel) on the simulator.
// `state` holds each vertex's current state words. Wake schedules follow
// the standard downcast/upcast timetables; energy is at most 2 per vertex
// for Downcast/Upcast and 1 for Intercast.
ClusterOpResult dist_cluster_op(const Graph& g, const Clustering& c, ClusterOpKind kind,
                                long long t0, const std::vector<std::vector<uint64_t>>& state,
                                const RunOptions& opts = {});

} // namespace core

#endif
