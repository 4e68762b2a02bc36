#include "CLI11.hpp"

#include "acceptance.hpp"
#include "core/clustering.hpp"
#include "core/distalgo.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/io.hpp"
#include "core/metrics.hpp"
#include "core/optimize.hpp"
#include "core/simkernel.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace core;

const char* kVersion = "core-1.0.0";

// ---------------------------------------------------------------------------
// small parsing helpers

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::map<std::string, std::string> parse_kv(const std::string& s) {
    std::map<std::string, std::string> kv;
    if (s.empty()) return kv;
    for (const std::string& part : split(s, ',')) {
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos)
            kv[part] = "1"; // bare flag, e.g. "torus"
        else
            kv[part.substr(0, eq)] = part.substr(eq + 1);
    }
    return kv;
}

int kv_int(const std::map<std::string, std::string>& kv, const std::string& key,
           const std::string& ctx) {
    auto it = kv.find(key);
    if (it == kv.end()) throw UsageError(ctx + " requires parameter " + key);
    return std::stoi(it->second);
}

int kv_int_or(const std::map<std::string, std::string>& kv, const std::string& key, int dflt) {
    auto it = kv.find(key);
    return it == kv.end() ? dflt : std::stoi(it->second);
}

double kv_double(const std::map<std::string, std::string>& kv, const std::string& key,
                 const std::string& ctx) {
    auto it = kv.find(key);
    if (it == kv.end()) throw UsageError(ctx + " requires parameter " + key);
    return std::stod(it->second);
}

// Graph specs: "cycle:n=12", "path:n=9", "grid:rows=3,cols=3[,torus]",
// "grid:dims=4x4x4", "comb:rows=3,cols=5", "rgg:n=100,radius=1.5[,k=2][,seed=7]",
// "regular:n=64,d=3[,seed=7]", or a plain path / "file:PATH" to an edge list.
Graph parse_graph(const std::string& spec, uint64_t default_seed, std::string* name_out) {
    auto colon = spec.find(':');
    std::string family = colon == std::string::npos ? "" : spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name_out) {
        *name_out = spec;
        for (char& ch : *name_out)
            if (ch == ',') ch = ';'; // keep the CSV single-field
    }
    if (colon == std::string::npos || family == "file") {
        std::string path = colon == std::string::npos ? spec : rest;
        return read_edge_list_file(path);
    }
    auto kv = parse_kv(rest);
    if (family == "cycle") return gen_cycle(kv_int(kv, "n", "cycle"));
    if (family == "path") return gen_path(kv_int(kv, "n", "path"));
    if (family == "grid") {
        std::vector<int> dims;
        if (kv.count("dims")) {
            for (const std::string& d : split(kv.at("dims"), 'x')) dims.push_back(std::stoi(d));
        } else {
            dims = {kv_int(kv, "rows", "grid"), kv_int(kv, "cols", "grid")};
        }
        return gen_grid(dims, kv_int_or(kv, "torus", 0) != 0);
    }
    if (family == "comb")
        return gen_comb(kv_int(kv, "rows", "comb"), kv_int(kv, "cols", "comb"));
    if (family == "rgg")
        return gen_random_geometric(kv_int(kv, "n", "rgg"), kv_int_or(kv, "k", 2),
                                    kv_double(kv, "radius", "rgg"),
                                    kv.count("seed") ? (uint64_t)std::stoull(kv.at("seed"))
                                                     : default_seed);
    if (family == "regular")
        return gen_random_regular(kv_int(kv, "n", "regular"), kv_int(kv, "d", "regular"),
                                  kv.count("seed") ? (uint64_t)std::stoull(kv.at("seed"))
                                                   : default_seed);
    throw UsageError("unknown graph family '" + family + "'");
}

// Clustering algorithms selectable on the command line.
Clustering run_algo(const std::string& algo, const Graph& g, double R, uint64_t seed,
                    std::string* params_out) {
    if (algo == "mis-voronoi-zero" || algo == "mis-voronoi-uniform") {
        StartTimes st = algo == "mis-voronoi-zero" ? StartTimes::Zero : StartTimes::Uniform;
        if (params_out) *params_out = st == StartTimes::Zero ? "st=zero" : "st=uniform";
        return mis_voronoi(g, (int)R, st, seed);
    }
    if (algo == "mpx-lnn" || algo == "mpx-lnr" || algo == "mpx-none") {
        MpxParams p;
        p.R = R;
        p.cutoff_mode = algo == "mpx-lnn"   ? CutoffMode::LnN
                        : algo == "mpx-lnr" ? CutoffMode::LnR
                                            : CutoffMode::None;
        if (params_out) *params_out = "cutoff=" + algo.substr(4);
        return mpx(g, p, seed);
    }
    if (algo == "derand") {
        if (params_out) *params_out = "objective=crossings";
        return derandomized_start_times(g, (int)R).clustering;
    }
    throw UsageError("unknown algorithm '" + algo + "'");
}

std::string metrics_row_for(const Graph& g, const Clustering& c, const std::string& gname,
                            const std::string& algo, const std::string& params, double R,
                            uint64_t seed) {
    MetricsReport rep = distortion(g, c);
    return metrics_csv_row(kVersion, gname, algo, params, g.n, g.m(), R, seed, rep);
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line without '=': " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

// ---------------------------------------------------------------------------
// subcommand state

struct Options {
    std::string graph, algo, model = "local", out, config, clustering_path, data_dir = "data";
    std::string R_list, eps_list;
    double R = 8, eps = 0.1;
    int trials = 1;
    uint64_t seed = 0;
    std::vector<int> only;
};

void write_text(const std::string& out_path, const std::string& body) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot open output file " + out_path);
    f << body;
}

int cmd_generate(const Options& o) {
    std::string name;
    Graph g = parse_graph(o.graph, o.seed, &name);
    std::ostringstream body;
    write_edge_list(body, g);
    write_text(o.out, body.str());
    return 0;
}

int cmd_cluster(const Options& o) {
    std::string name, params;
    Graph g = parse_graph(o.graph, o.seed, &name);
    Clustering c = run_algo(o.algo, g, o.R, o.seed, &params);
    validate_clustering(g, c);
    if (!o.out.empty()) write_clustering_file(o.out, c);
    std::cout << metrics_csv_header() << "\n"
              << metrics_row_for(g, c, name, o.algo, params, o.R, o.seed) << "\n";
    return 0;
}

int cmd_analyze(const Options& o) {
    std::string name;
    Graph g = parse_graph(o.graph, o.seed, &name);
    Clustering c = read_clustering_file(o.clustering_path);
    validate_clustering(g, c);
    std::cout << metrics_csv_header() << "\n"
              << metrics_row_for(g, c, name, "file", o.clustering_path, c.scale, o.seed) << "\n";
    return 0;
}

ModelKind parse_model(const std::string& s) {
    if (s == "local") return ModelKind::Local;
    if (s == "congest") return ModelKind::Congest;
    if (s == "radio") return ModelKind::RadioCongest;
    throw UsageError("unknown model '" + s + "' (local, congest, radio)");
}

int cmd_simulate(const Options& o) {
    std::string name;
    Graph g = parse_graph(o.graph, o.seed, &name);
    std::ostringstream out;
    if (o.algo == "dist-mis-voronoi-zero" || o.algo == "dist-mis-voronoi-uniform" ||
        o.algo == "dist-mis-voronoi-luby") {
        StartTimes st = o.algo == "dist-mis-voronoi-uniform" ? StartTimes::Uniform
                                                             : StartTimes::Zero;
        CenterMode mode = o.algo == "dist-mis-voronoi-luby" ? CenterMode::Luby
                                                            : CenterMode::OracleGreedyId;
        DistClusteringResult r = dist_mis_voronoi(g, (int)o.R, st, mode, o.seed);
        validate_clustering(g, r.clustering);
        out << "graph " << name << "\nrounds " << r.run.rounds_used << "\nenergy "
            << r.run.energy_complexity << "\nclusters " << r.clustering.cluster_count() << "\n";
        if (!o.out.empty()) write_clustering_file(o.out, r.clustering);
    } else if (o.algo == "multi-scale") {
        MultiScaleResult ms = multi_scale(g, (int)o.R, CenterMode::OracleGreedyId, o.seed);
        out << "graph " << name << "\n";
        for (size_t i = 0; i < ms.levels.size(); i++) {
            out << "level " << i << " scale " << ms.levels[i].scale << " clusters "
                << ms.levels[i].cluster_count();
            if (i > 0)
                out << " rounds " << ms.level_rounds[i] << " energy " << ms.level_energy[i];
            out << " cumulative_energy " << ms.cumulative_energy[i] << "\n";
        }
    } else if (o.algo == "ruling") {
        RulingHierarchy h = ruling_hierarchy(g, (int)o.R, parse_model(o.model), o.seed);
        out << "graph " << name << "\n";
        for (size_t i = 0; i < h.levels.size(); i++)
            out << "level " << i << " size " << h.levels[i].set.size() << " rounds "
                << h.levels[i].rounds << "\n";
    } else {
        throw UsageError("unknown simulation '" + o.algo +
                         "' (dist-mis-voronoi-{zero,uniform,luby}, multi-scale, ruling)");
    }
    std::cout << out.str();
    return 0;
}

Problem parse_problem(const std::string& s) {
    if (s == "matching") return Problem::Matching;
    if (s == "mis") return Problem::Mis;
    if (s == "maxcut") return Problem::MaxCut;
    throw UsageError("unknown problem '" + s + "' (matching, mis, maxcut)");
}

int cmd_approx(const Options& o) {
    std::string name;
    Graph g = parse_graph(o.graph, o.seed, &name);
    Problem pr = parse_problem(o.algo);
    ApproxResult r;
    if (o.model == "mpx")
        r = approx_solve_mpx(pr, g, o.eps, o.seed);
    else if (o.model == "derandomized")
        r = approx_solve(pr, g, o.eps, ApproxMode::Derandomized, o.seed);
    else if (o.model == "randomized" || o.model == "local")
        r = approx_solve(pr, g, o.eps, ApproxMode::Randomized, o.seed);
    else
        throw UsageError("approx --model must be randomized, derandomized, or mpx");
    std::string body = "graph " + name + "\n" + format_approx(r);
    write_text(o.out, body);
    if (!o.out.empty()) std::cout << body;
    return 0;
}

int cmd_sweep(const Options& o, const CLI::App* sub) {
    auto cfg = o.config.empty() ? std::map<std::string, std::string>{}
                                : read_config_file(o.config);
    auto setting = [&](const std::string& flag, const std::string& key,
                       const std::string& cli_value) -> std::string {
        if (sub->count(flag)) return cli_value;
        auto it = cfg.find(key);
        return it == cfg.end() ? cli_value : it->second;
    };
    std::string graph_spec = setting("--graph", "graph", o.graph);
    std::string algo = setting("--algo", "algo", o.algo);
    std::string R_list = setting("--R", "R", o.R_list);
    std::string out_path = setting("--out", "out", o.out);
    int trials = std::stoi(setting("--trials", "trials", std::to_string(o.trials)));
    uint64_t base_seed = std::stoull(setting("--seed", "seed", std::to_string(o.seed)));
    if (graph_spec.empty() || algo.empty() || out_path.empty())
        throw UsageError("sweep requires graph, algo and out (flags or config)");
    if (R_list.empty()) throw UsageError("sweep requires a nonempty R list");
    if (trials < 1) throw UsageError("sweep requires trials >= 1");

    std::vector<double> Rs;
    for (const std::string& r : split(R_list, ','))
        if (!r.empty()) Rs.push_back(std::stod(r));
    if (Rs.empty()) throw UsageError("sweep requires a nonempty R list");

    // resume: a row is keyed by (graph, algo, params, R, seed)
    std::set<std::string> have;
    bool existed = false;
    {
        std::ifstream in(out_path);
        std::string line;
        while (std::getline(in, line)) {
            existed = true;
            auto cols = split(line, ',');
            if (cols.size() > 7 && cols[0] != "version")
                have.insert(cols[1] + "|" + cols[2] + "|" + cols[3] + "|" + cols[6] + "|" +
                            cols[7]);
        }
    }
    std::ofstream out(out_path, std::ios::app);
    if (!out) throw UsageError("cannot open output file " + out_path);
    if (!existed) out << metrics_csv_header() << "\n";

    std::string name;
    Graph g = parse_graph(graph_spec, base_seed, &name);
    for (double R : Rs) {
        for (int t = 0; t < trials; t++) {
            uint64_t seed = base_seed + (uint64_t)t;
            std::string params;
            // params is a pure function of the algorithm name, so the resume
            // key is known without recomputing the row
            if (algo == "mis-voronoi-zero") params = "st=zero";
            else if (algo == "mis-voronoi-uniform") params = "st=uniform";
            else if (algo.rfind("mpx-", 0) == 0) params = "cutoff=" + algo.substr(4);
            else if (algo == "derand") params = "objective=crossings";
            else throw UsageError("unknown algorithm '" + algo + "'");
            std::ostringstream Rstr;
            Rstr << R;
            std::string key = name + "|" + algo + "|" + params + "|" + Rstr.str() + "|" +
                              std::to_string(seed);
            if (have.count(key)) continue;
            Clustering c = run_algo(algo, g, R, seed, &params);
            out << metrics_row_for(g, c, name, algo, params, R, seed) << "\n";
            out.flush();
        }
    }
    return 0;
}

int cmd_accept(const Options& o) {
    int failures = run_acceptance(o.only, std::cout, o.data_dir);
    if (failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << failures << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph clustering and energy-efficient distributed simulation toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph,
                        "graph spec (cycle:n=.., path:n=.., grid:rows=..,cols=.., comb:..,"
                        " rgg:.., regular:.., file:PATH)");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--out", o.out, "output file");
        return sub;
    };

    auto* gen = add_common(app.add_subcommand("generate", "write a generated graph"));
    gen->get_option("--graph")->required();

    auto* clus = add_common(app.add_subcommand("cluster", "cluster a graph, print metrics CSV"));
    clus->get_option("--graph")->required();
    clus->add_option("--algo", o.algo, "clustering algorithm")->required();
    clus->add_option("--R", o.R, "scale factor");

    auto* ana = add_common(app.add_subcommand("analyze", "metrics CSV for a clustering file"));
    ana->get_option("--graph")->required();
    ana->add_option("--clustering", o.clustering_path, "clustering file")->required();

    auto* sim = add_common(app.add_subcommand("simulate", "run a distributed construction"));
    sim->get_option("--graph")->required();
    sim->add_option("--algo", o.algo, "dist-mis-voronoi-{zero,uniform,luby}, multi-scale, ruling")
        ->required();
    sim->add_option("--R", o.R, "scale factor (or max level for multi-scale/ruling)");
    sim->add_option("--model", o.model, "local or congest");

    auto* apx = add_common(app.add_subcommand("approx", "(1-eps)-approximation pipeline"));
    apx->get_option("--graph")->required();
    apx->add_option("--algo", o.algo, "matching, mis or maxcut")->required();
    apx->add_option("--eps", o.eps, "target approximation slack");
    apx->add_option("--model", o.model, "randomized, derandomized or mpx");

    auto* swp = add_common(app.add_subcommand("sweep", "parameter sweep to CSV (resumable)"));
    swp->add_option("--algo", o.algo, "clustering algorithm");
    swp->add_option("--R", o.R_list, "comma-separated R list");
    swp->add_option("--trials", o.trials, "trials per cell");
    swp->add_option("--config", o.config, "key=value config file");

    auto* acc = app.add_subcommand("accept", "run the acceptance suite");
    acc->add_option("--only", o.only, "criteria to run (default all)");
    acc->add_option("--data", o.data_dir, "data directory with pinned thresholds");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(o);
        if (clus->parsed()) return cmd_cluster(o);
        if (ana->parsed()) return cmd_analyze(o);
        if (sim->parsed()) return cmd_simulate(o);
        if (apx->parsed()) return cmd_approx(o);
        if (swp->parsed()) return cmd_sweep(o, swp);
        if (acc->parsed()) return cmd_accept(o);
    } catch (const core::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
