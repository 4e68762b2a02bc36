#ifndef CORE_DISTALGO_HPP
#define CORE_DISTALGO_HPP

#include "core/cluster_ops.hpp"
#include "core/clustering.hpp"
#include "core/graph.hpp"
#include "core/simkernel.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace core {

// ---------------------------------------------------------------------------
// Distributed MIS-Voronoi clustering (LOCAL)

enum class CenterMode {
    OracleGreedyId, // center set injected from the sequential greedy-by-id rule
                    // (stand-in for the black-box MIS subroutine)
    Luby            // centers computed in-simulation by Luby's algorithm
};

struct DistClusteringResult {
    Clustering clustering;
    SimRun run;
};

// Algorithms "pick centers in G^{<=R}, then flood claims from start times":
// variant Zero floods immediately, Uniform uses per-center start times drawn
// from {0..floor(R/10)} (same derivation as the sequential uniform variant).
DistClusteringResult dist_mis_voronoi(const Graph& g, int R, StartTimes variant,
                                      CenterMode mode = CenterMode::OracleGreedyId,
                                      uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Multi-scale bootstrapping

struct BuildLevelResult {
    Clustering clustering;
    SimRun run;
    int M_used = 0;
    int retries = 0;
};

// One bootstrapping step: from a level clustering at scale `scale_from`
// (2^j) to scale 2*scale_from, by M gather iterations of
// DOWNCAST-INTERCAST-UPCAST and per-vertex local recomputation.
// M <= 0 means "derive from measured radii".
BuildLevelResult build_next_level(const Graph& g, const Clustering& level,
                                  int scale_from, int M = 0,
                                  CenterMode mode = CenterMode::OracleGreedyId,
                                  uint64_t seed = 0);

struct MultiScaleResult {
    std::vector<Clustering> levels;        // scales 2^0 .. 2^i_max
    std::vector<long long> level_rounds;   // rounds of each build step (index i: 2^{i-1}->2^i)
    std::vector<long long> level_energy;   // energy complexity of each build step
    std::vector<long long> cumulative_energy; // per level, max over vertices of summed awake rounds
};

MultiScaleResult multi_scale(const Graph& g, int i_max,
                             CenterMode mode = CenterMode::OracleGreedyId,
                             uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Covers

struct CoverMembership {
    int cover_id;    // index into cover centers
    int depth;       // hop distance to the cover center
    int parent;      // BFS-tree parent vertex id (self for the center)
};

struct CoverView {
    int R = 1;
    int ball_radius = 0;                 // radius actually used for the balls
    std::vector<int> centers;
    std::vector<std::vector<CoverMembership>> memberships; // per vertex
    int fold = 0;                        // max memberships per vertex
    std::vector<int> home_of;            // cover id whose ball covers B_R(v)
};

// Balls of radius mult*R around mis_power_graph(g, R) centers, with BFS
// trees; every B_R(w) is contained in the ball of w's nearest center.
CoverView build_cover(const Graph& g, int R, int ball_radius_mult = 2);

// As build_cover but with an explicit center-set spacing parameter: centers
// are a MIS of G^{<=spacing}, balls have radius spacing+R. Sparser centers
// lower the participation fold of the low-energy simulation below.
CoverView build_cover_spaced(const Graph& g, int R, int spacing);

// ---------------------------------------------------------------------------
// Low-energy simulation of LOCAL algorithms

// Deterministic target program in explicit-state form so states can travel
// inside messages: called once per round with the previous round's inbox;
// state starts empty; runs rounds 0..T-1 and must be silent afterwards.
struct TargetStep {
    std::vector<std::pair<int, Message>> sends;
    std::optional<std::vector<uint64_t>> output;
};
using TargetProgram = std::function<TargetStep(const VertexContext& ctx,
                                               std::vector<uint64_t>& state,
                                               long long round,
                                               const std::vector<std::pair<int, Message>>& inbox)>;

// Direct execution: every vertex awake for all T rounds (the energy
// baseline); outputs are whatever the target sets.
SimRun run_target_direct(const Graph& g, const TargetProgram& target, long long T,
                         uint64_t seed = 0);

struct LocalSimResult {
    SimRun run;               // the low-energy simulation phase
    CoverView cover;          // the cover used
};

// Simulates `segments` blocks of t rounds of the target via per-cover-cluster
// UPCAST/DOWNCAST state exchanges; outputs equal run_target_direct with
// T = t*segments. The cover is built host-side (its distributed construction
// cost is measured separately via multi_scale); pass `cover` to reuse one.
LocalSimResult simulate_local_algorithm(const Graph& g, const TargetProgram& target,
                                        int t, int segments, uint64_t seed = 0,
                                        const CoverView* cover = nullptr);

// ---------------------------------------------------------------------------
// Ruling-set hierarchy

struct RulingLevel {
    std::vector<int> set;        // S_i
    Clustering clustering;       // Voronoi view of S_i
    long long rounds = 0;        // simulated rounds spent building this level
    long long phase_length = 0;  // measured per-power-round pipeline length (CONGEST)
};

struct RulingHierarchy {
    std::vector<RulingLevel> levels; // index i holds S_i (S_0 = V)
};

// S_0 = V; S_{i+1} = maximal subset of S_i independent in G^{<=2^i}, chosen
// by Luby's algorithm simulated in the requested model. Validates the
// (2^{i-1}+1, 2^i-1)-ruling property at every level (RulingViolation).
RulingHierarchy ruling_hierarchy(const Graph& g, int i_max, ModelKind model,
                                 uint64_t seed = 0);

} // namespace core

#endif
