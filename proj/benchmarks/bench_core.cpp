#include <benchmark/benchmark.h>

#include "core/clustering.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/metrics.hpp"
#include "core/simkernel.hpp"

using namespace core;

static void bm_mis_voronoi_cycle(benchmark::State& state) {
    Graph g = gen_cycle((int)state.range(0));
    for (auto _ : state) {
        Clustering c = mis_voronoi(g, 16, StartTimes::Uniform, 1);
        benchmark::DoNotOptimize(c.center_of.data());
    }
}
BENCHMARK(bm_mis_voronoi_cycle)->Arg(1000)->Arg(10000)->Arg(100000);

static void bm_mis_voronoi_grid(benchmark::State& state) {
    int side = (int)state.range(0);
    Graph g = gen_grid({side, side}, false);
    for (auto _ : state) {
        Clustering c = mis_voronoi(g, 8, StartTimes::Uniform, 1);
        benchmark::DoNotOptimize(c.center_of.data());
    }
}
BENCHMARK(bm_mis_voronoi_grid)->Arg(32)->Arg(100);

static void bm_mpx_cycle(benchmark::State& state) {
    Graph g = gen_cycle((int)state.range(0));
    MpxParams p;
    p.R = 16;
    uint64_t seed = 0;
    for (auto _ : state) {
        Clustering c = mpx(g, p, seed++);
        benchmark::DoNotOptimize(c.center_of.data());
    }
}
BENCHMARK(bm_mpx_cycle)->Arg(1000)->Arg(10000)->Arg(100000);

static void bm_distortion_sampled(benchmark::State& state) {
    Graph g = gen_cycle((int)state.range(0));
    Clustering c = mis_voronoi(g, 16, StartTimes::Uniform, 1);
    DistortionOptions opts;
    opts.full_pair_limit = 1000;
    for (auto _ : state) {
        MetricsReport r = distortion(g, c, opts);
        benchmark::DoNotOptimize(r.distortion);
    }
}
BENCHMARK(bm_distortion_sampled)->Arg(2000)->Arg(10000);

namespace {

// t rounds of flooding; the usual stress load for the kernel
struct Flood : VertexProc {
    int t, degree;
    Flood(int t, int degree) : t(t), degree(degree) {}
    Action on_wake(long long round, const Inbox&) override {
        Action a;
        if (round < t) {
            Message m;
            m.push((uint64_t)round, 32);
            for (int p = 0; p < degree; p++) a.sends.push_back({p, m});
            a.next_wake = round + 1;
        } else {
            a.halt = true;
        }
        return a;
    }
};

} // namespace

static void bm_kernel_flood(benchmark::State& state) {
    Graph g = gen_cycle((int)state.range(0));
    int t = 16;
    ProgramFactory f = [t](const VertexContext& ctx) {
        return std::unique_ptr<VertexProc>(new Flood(t, ctx.degree));
    };
    for (auto _ : state) {
        SimRun r = run(g, f, ModelSpec::local());
        benchmark::DoNotOptimize(r.rounds_used);
    }
}
BENCHMARK(bm_kernel_flood)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
