#include "core/distalgo.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>

namespace core {

namespace {

Message words_message(const std::vector<uint64_t>& words) {
    Message m;
    for (uint64_t w : words) m.push(w, 64);
    return m;
}

// ---------------------------------------------------------------------------
// Distributed MIS-Voronoi

enum : uint64_t { kActive = 0, kInMis = 1, kCovered = 2 };

struct DVConfig {
    int R = 1;
    int T = 0;          // start times drawn from {0..T}
    uint64_t seed = 0;  // global seed (start times, Luby values)
    bool luby = false;
    int K = 0;          // Luby power rounds (host-derived)
    long long B0 = 0;   // first recruitment round
};

// Phase A (Luby mode): K power rounds, each split into two R-round flood
// windows (propagate joins / propagate the surviving active set); decisions
// happen when the next window's first wake merges the final inbox.
// Phase B: centers flood claims from their start times; a vertex adopts the
// first claim to arrive, ties to the smallest center id then sender id.
class DistVoronoiProc : public VertexProc {
public:
    DistVoronoiProc(const DVConfig& cfg, int id, std::vector<int> neighbor_ids, bool oracle_center)
        : cfg_(cfg), id_(id), nbr_(std::move(neighbor_ids)), center_(oracle_center) {}

    long long first_wake() override {
        if (cfg_.luby) return 0;
        return center_ ? cfg_.B0 + start_time() : cfg_.B0;
    }

    Action on_wake(long long round, const Inbox& inbox) override {
        if (cfg_.luby && round < cfg_.B0) return phase_a(round, inbox);
        return phase_b(round, inbox);
    }

private:
    int start_time() const {
        return (int)(hash_combine(cfg_.seed, (uint64_t)id_) % (uint64_t)(cfg_.T + 1));
    }

    Action phase_a(long long round, const Inbox& inbox) {
        for (const auto& [port, msg] : inbox.items) {
            for (size_t i = 0; i + 3 <= msg.size(); i += 3) {
                int u = (int)msg.get(i);
                uint64_t st = msg.get(i + 1);
                int dist = (int)msg.get(i + 2) + 1;
                auto it = know_.find(u);
                if (it == know_.end() || it->second.second > dist) know_[u] = {st, dist};
            }
        }
        long long r = round / (2LL * cfg_.R);
        long long off = round % (2LL * cfg_.R);
        if (off == 0) {
            if (r > 0 && status_ == kActive) {
                uint64_t mine = luby_value(cfg_.seed, id_, (int)r - 1);
                bool win = true;
                for (auto& [u, e] : know_) {
                    if (u == id_ || e.first != kActive || e.second > cfg_.R) continue;
                    uint64_t theirs = luby_value(cfg_.seed, u, (int)r - 1);
                    if (theirs < mine || (theirs == mine && u < id_)) { win = false; break; }
                }
                if (win) status_ = kInMis;
            }
            reset_knowledge();
        } else if (off == cfg_.R) {
            if (status_ == kActive) {
                for (auto& [u, e] : know_)
                    if (u != id_ && e.first == kInMis && e.second <= cfg_.R) { status_ = kCovered; break; }
            }
            reset_knowledge();
        }
        Action a;
        if (round == 2LL * cfg_.R * cfg_.K) { // last decision done; switch to recruitment
            center_ = status_ == kInMis;
            a.next_wake = center_ ? cfg_.B0 + start_time() : cfg_.B0;
            return a;
        }
        std::vector<uint64_t> words;
        for (auto& [u, e] : know_) {
            if (e.second >= cfg_.R) continue;
            words.push_back((uint64_t)u);
            words.push_back(e.first);
            words.push_back((uint64_t)e.second);
        }
        if (!words.empty()) {
            Message m = words_message(words);
            for (int p = 0; p < (int)nbr_.size(); p++) a.sends.push_back({p, m});
        }
        a.next_wake = round + 1;
        return a;
    }

    Action phase_b(long long round, const Inbox& inbox) {
        Action a;
        if (center_) {
            Message claim;
            claim.push((uint64_t)id_, 64);
            claim.push(0, 64);
            for (int p = 0; p < (int)nbr_.size(); p++) a.sends.push_back({p, claim});
            a.output = std::vector<uint64_t>{(uint64_t)id_, 0, (uint64_t)id_};
            a.halt = true;
            return a;
        }
        int best_center = -1, best_sender = -1;
        long long best_hop = 0;
        for (const auto& [port, msg] : inbox.items) {
            int c = (int)msg.get(0);
            long long hop = (long long)msg.get(1);
            int sender = nbr_[port];
            if (best_center < 0 || c < best_center ||
                (c == best_center && sender < best_sender)) {
                best_center = c;
                best_sender = sender;
                best_hop = hop;
            }
        }
        if (best_center < 0) {
            a.next_wake = round + 1;
            return a;
        }
        Message claim;
        claim.push((uint64_t)best_center, 64);
        claim.push((uint64_t)(best_hop + 1), 64);
        for (int p = 0; p < (int)nbr_.size(); p++) a.sends.push_back({p, claim});
        a.output = std::vector<uint64_t>{(uint64_t)best_center, (uint64_t)(best_hop + 1),
                                         (uint64_t)best_sender};
        a.halt = true;
        return a;
    }

    void reset_knowledge() {
        know_.clear();
        know_[id_] = {status_, 0};
    }

    DVConfig cfg_;
    int id_;
    std::vector<int> nbr_;
    bool center_;
    uint64_t status_ = kActive;
    std::map<int, std::pair<uint64_t, int>> know_; // id -> (status, dist)
};

// Greedy-by-id maximal G^{<=S}-independent subset of a candidate set.
std::vector<int> greedy_subset_mis(const Graph& g, const std::vector<int>& candidates, int S) {
    std::vector<int> dist_to(g.n, -1);
    std::vector<int> chosen;
    for (int c : candidates) {
        if (dist_to[c] >= 0 && dist_to[c] <= S) continue;
        chosen.push_back(c);
        std::queue<int> q;
        dist_to[c] = 0;
        q.push(c);
        while (!q.empty()) {
            int u = q.front(); q.pop();
            if (dist_to[u] == S) continue;
            for (int x : g.adjacency[u]) {
                if (dist_to[x] < 0 || dist_to[x] > dist_to[u] + 1) {
                    dist_to[x] = dist_to[u] + 1;
                    q.push(x);
                }
            }
        }
    }
    return chosen;
}

// Luby's algorithm over an id-keyed set (values drawn from the member ids,
// so vertex programs can recompute them locally).
std::vector<int> luby_ids(const std::vector<int>& ids,
                          const std::function<std::vector<int>(int)>& nbrs,
                          uint64_t seed, int* rounds_used) {
    std::map<int, char> active, in_mis;
    for (int v : ids) { active[v] = 1; in_mis[v] = 0; }
    int remaining = (int)ids.size();
    int round = 0;
    while (remaining > 0) {
        std::vector<int> joiners;
        for (int v : ids) {
            if (!active[v]) continue;
            uint64_t mine = luby_value(seed, v, round);
            bool win = true;
            for (int u : nbrs(v)) {
                if (!active[u]) continue;
                uint64_t theirs = luby_value(seed, u, round);
                if (theirs < mine || (theirs == mine && u < v)) { win = false; break; }
            }
            if (win) joiners.push_back(v);
        }
        for (int v : joiners) {
            if (!active[v]) continue;
            in_mis[v] = 1;
            active[v] = 0;
            remaining--;
            for (int u : nbrs(v))
                if (active[u]) { active[u] = 0; remaining--; }
        }
        round++;
        if (round > 64 * 64 && remaining > 0) throw Error("luby_ids failed to converge");
    }
    if (rounds_used) *rounds_used = round;
    std::vector<int> out;
    for (int v : ids)
        if (in_mis[v]) out.push_back(v);
    return out;
}

} // namespace

DistClusteringResult dist_mis_voronoi(const Graph& g, int R, StartTimes variant,
                                      CenterMode mode, uint64_t seed) {
    if (R < 1) throw Error("dist_mis_voronoi requires R >= 1");
    DVConfig cfg;
    cfg.R = R;
    cfg.T = variant == StartTimes::Uniform ? R / 10 : 0;
    cfg.seed = seed;
    std::vector<char> oracle_center(g.n, 0);
    if (mode == CenterMode::OracleGreedyId) {
        for (int c : mis_power_graph(g, R, MisStrategy::GreedyId)) oracle_center[c] = 1;
        cfg.B0 = 0;
    } else {
        cfg.luby = true;
        std::vector<std::vector<int>> pn(g.n);
        for (int v = 0; v < g.n; v++) {
            auto dist = bfs_distances_bounded(g, v, R);
            for (int u = 0; u < g.n; u++)
                if (u != v && dist[u] >= 1) pn[v].push_back(u);
        }
        luby_mis(g.n, [&](int v) { return pn[v]; }, seed, &cfg.K);
        cfg.B0 = 2LL * R * cfg.K + 1;
    }

    ProgramFactory factory = [&](const VertexContext& ctx) -> std::unique_ptr<VertexProc> {
        std::vector<int> nbr(g.adjacency[ctx.id].begin(), g.adjacency[ctx.id].end());
        return std::make_unique<DistVoronoiProc>(cfg, ctx.id, std::move(nbr),
                                                 oracle_center[ctx.id] != 0);
    };
    DistClusteringResult res;
    res.run = run(g, factory, ModelSpec::local());
    if (res.run.timed_out) throw Error("dist_mis_voronoi timed out");

    Clustering c;
    c.scale = R;
    c.center_of.assign(g.n, -1);
    c.depth_of.assign(g.n, 0);
    c.parent_of.assign(g.n, -1);
    for (int v = 0; v < g.n; v++) {
        if (!res.run.outputs[v]) throw Error("dist_mis_voronoi: vertex produced no output");
        const auto& out = *res.run.outputs[v];
        c.center_of[v] = (int)out[0];
        c.depth_of[v] = (int)out[1];
        c.parent_of[v] = (int)out[2];
        if (c.center_of[v] == v) c.centers.push_back(v);
    }
    res.clustering = std::move(c);
    return res;
}

// ---------------------------------------------------------------------------
// Multi-scale bootstrapping

namespace {

// knowledge record: [id, level center, depth, next-center flag, deg, nbrs...]
using Knowledge = std::map<int, std::vector<uint64_t>>;

void merge_record_words(Knowledge& know, const std::vector<uint64_t>& words) {
    size_t i = 0;
    while (i + 5 <= words.size()) {
        int id = (int)words[i];
        size_t len = 5 + (size_t)words[i + 4];
        if (i + len > words.size()) throw Error("malformed knowledge record");
        if (!know.count(id))
            know[id] = std::vector<uint64_t>(words.begin() + i, words.begin() + i + len);
        i += len;
    }
}

std::vector<uint64_t> flatten_knowledge(const Knowledge& know) {
    std::vector<uint64_t> words;
    for (const auto& [id, rec] : know) words.insert(words.end(), rec.begin(), rec.end());
    return words;
}

struct BuildDuty {
    bool to_children = false;
    bool to_parent = false;
    bool to_boundary = false;
    bool compute = false;
};

struct BuildComputeParams {
    int S = 2;
    bool luby = false;
    int K = 0;
    uint64_t seed = 0;
};

// BFS over the knowledge subgraph (edges where both endpoints are known).
std::map<int, int> known_bfs(const Knowledge& know, const std::vector<int>& sources, int limit) {
    std::map<int, int> dist;
    std::queue<int> q;
    for (int s : sources)
        if (know.count(s) && !dist.count(s)) { dist[s] = 0; q.push(s); }
    while (!q.empty()) {
        int u = q.front(); q.pop();
        if (limit >= 0 && dist[u] >= limit) continue;
        const auto& rec = know.at(u);
        for (size_t i = 0; i < rec[4]; i++) {
            int x = (int)rec[5 + i];
            if (know.count(x) && !dist.count(x)) {
                dist[x] = dist[u] + 1;
                q.push(x);
            }
        }
    }
    return dist;
}

// the view is complete out to radius rho from the BFS origin: every vertex
// strictly inside has all of its neighbors present.
bool known_complete(const Knowledge& know, const std::map<int, int>& dist, int rho) {
    for (const auto& [u, d] : dist) {
        if (d > rho - 1) continue;
        const auto& rec = know.at(u);
        for (size_t i = 0; i < rec[4]; i++)
            if (!know.count((int)rec[5 + i])) return false;
    }
    return true;
}

// Local recomputation of the vertex's own (center, depth, parent) at scale S.
std::optional<std::array<int, 3>> build_local_compute(int v, const Knowledge& know,
                                                      const BuildComputeParams& p) {
    std::vector<int> view_centers;
    for (const auto& [id, rec] : know)
        if ((int)rec[1] == id) view_centers.push_back(id);

    // next-center flags: injected (oracle mode) or recomputed by running
    // Luby over the view's level centers, with per-center certainty tracking
    std::map<int, char> flag, trusted;
    if (!p.luby) {
        for (const auto& [id, rec] : know)
            if ((int)rec[1] == id) { flag[id] = rec[3] ? 1 : 0; trusted[id] = 1; }
    } else {
        std::map<int, std::vector<int>> cnbrs;
        std::map<int, char> cert;
        for (int c : view_centers) {
            auto cd = known_bfs(know, {c}, p.S + 1);
            cert[c] = known_complete(know, cd, p.S) ? 1 : 0;
            for (int u : view_centers)
                if (u != c && cd.count(u) && cd[u] <= p.S) cnbrs[c].push_back(u);
        }
        for (int r = 0; r < p.K; r++) {
            std::map<int, char> next = cert;
            for (int c : view_centers) {
                if (!cert[c]) { next[c] = 0; continue; }
                for (int u : cnbrs[c])
                    if (!cert[u]) { next[c] = 0; break; }
            }
            cert = std::move(next);
        }
        std::map<int, char> active, in_mis;
        for (int c : view_centers) { active[c] = 1; in_mis[c] = 0; }
        for (int r = 0; r < p.K; r++) {
            std::vector<int> joiners;
            for (int c : view_centers) {
                if (!active[c]) continue;
                uint64_t mine = luby_value(p.seed, c, r);
                bool win = true;
                for (int u : cnbrs[c]) {
                    if (!active[u]) continue;
                    uint64_t theirs = luby_value(p.seed, u, r);
                    if (theirs < mine || (theirs == mine && u < c)) { win = false; break; }
                }
                if (win) joiners.push_back(c);
            }
            for (int c : joiners) {
                if (!active[c]) continue;
                in_mis[c] = 1;
                active[c] = 0;
                for (int u : cnbrs[c]) active[u] = 0;
            }
        }
        for (int c : view_centers) { flag[c] = in_mis[c]; trusted[c] = cert[c]; }
    }

    auto dist_v = known_bfs(know, {v}, -1);
    std::vector<int> flagged;
    int dstar = -1;
    for (int c : view_centers) {
        if (!flag[c]) continue;
        flagged.push_back(c);
        auto it = dist_v.find(c);
        if (it != dist_v.end() && (dstar < 0 || it->second < dstar)) dstar = it->second;
    }
    if (dstar < 0) return std::nullopt;
    int rho = dstar + 2;
    if (!known_complete(know, dist_v, rho)) return std::nullopt;
    if (p.luby) {
        for (int c : view_centers) {
            auto it = dist_v.find(c);
            if (it != dist_v.end() && it->second <= dstar + 1 && !trusted[c]) return std::nullopt;
        }
    }

    // labels at scale S: layered BFS from the flagged centers with the
    // (depth, smallest center, smallest parent) tie rule
    auto depth = known_bfs(know, flagged, -1);
    std::vector<std::pair<int, int>> order; // (depth, id)
    for (auto& [u, d] : depth) order.push_back({d, u});
    std::sort(order.begin(), order.end());
    std::map<int, int> center, parent;
    for (auto& [d, u] : order) {
        if (d == 0) { center[u] = u; parent[u] = u; continue; }
        const auto& rec = know.at(u);
        int bc = -1, bp = -1;
        for (size_t i = 0; i < rec[4]; i++) {
            int y = (int)rec[5 + i];
            auto it = depth.find(y);
            if (it == depth.end() || it->second != d - 1) continue;
            int cy = center.at(y);
            if (bc < 0 || cy < bc || (cy == bc && y < bp)) {
                if (bc < 0 || cy < bc) bp = y; else bp = std::min(bp, y);
                bc = bc < 0 ? cy : std::min(bc, cy);
            }
        }
        center[u] = bc;
        parent[u] = bp;
    }
    if (!depth.count(v)) return std::nullopt;
    return std::array<int, 3>{center.at(v), depth.at(v), parent.at(v)};
}

class BuildProc : public VertexProc {
public:
    BuildProc(std::map<long long, BuildDuty> wakes, ClusterLocalView view,
              std::vector<uint64_t> own_record, int id, BuildComputeParams params)
        : wakes_(std::move(wakes)), view_(std::move(view)), id_(id), params_(params) {
        merge_record_words(know_, own_record);
    }

    long long first_wake() override { return wakes_.begin()->first; }

    Action on_wake(long long round, const Inbox& inbox) override {
        for (const auto& [port, msg] : inbox.items) merge_record_words(know_, msg.fields);
        Action a;
        auto it = wakes_.find(round);
        if (it == wakes_.end()) throw Error("build proc woke in an unscheduled round");
        const BuildDuty& duty = it->second;
        if (duty.to_children || duty.to_parent || duty.to_boundary) {
            Message m = words_message(flatten_knowledge(know_));
            if (duty.to_children)
                for (int p : view_.child_ports) a.sends.push_back({p, m});
            if (duty.to_parent && view_.parent_port >= 0)
                a.sends.push_back({view_.parent_port, m});
            if (duty.to_boundary)
                for (int p : view_.boundary_ports) a.sends.push_back({p, m});
        }
        if (duty.compute) {
            auto res = build_local_compute(id_, know_, params_);
            if (res)
                a.output = std::vector<uint64_t>{(uint64_t)(*res)[0], (uint64_t)(*res)[1],
                                                 (uint64_t)(*res)[2]};
            else
                a.output = std::vector<uint64_t>{UINT64_MAX}; // insufficient view
            a.halt = true;
            return a;
        }
        auto nx = std::next(it);
        if (nx == wakes_.end()) { a.halt = true; return a; }
        a.next_wake = nx->first;
        return a;
    }

private:
    std::map<long long, BuildDuty> wakes_;
    ClusterLocalView view_;
    Knowledge know_;
    int id_;
    BuildComputeParams params_;
};

int min_center_separation(const Graph& g, const std::vector<int>& centers, int cap) {
    if ((int)centers.size() < 2) return cap;
    std::vector<char> is_center(g.n, 0);
    for (int c : centers) is_center[c] = 1;
    int best = cap;
    for (int c : centers) {
        auto dist = bfs_distances_bounded(g, c, best);
        for (int u = 0; u < g.n; u++)
            if (u != c && is_center[u] && dist[u] > 0) best = std::min(best, dist[u]);
        if (best <= 1) return 1;
    }
    return best;
}

} // namespace

BuildLevelResult build_next_level(const Graph& g, const Clustering& level, int scale_from,
                                  int M, CenterMode mode, uint64_t seed) {
    if (scale_from < 1) throw Error("build_next_level requires scale_from >= 1");
    int S = 2 * scale_from;
    auto views = make_cluster_views(g, level);
    int d = 0;
    for (const auto& v : views) d = std::max(d, v.d);

    BuildComputeParams params;
    params.S = S;
    params.seed = seed;
    std::vector<char> flag(g.n, 0);
    if (mode == CenterMode::OracleGreedyId) {
        for (int c : greedy_subset_mis(g, level.centers, S)) flag[c] = 1;
    } else {
        params.luby = true;
        std::map<int, std::vector<int>> cnbrs;
        for (int c : level.centers) {
            auto dist = bfs_distances_bounded(g, c, S);
            for (int u : level.centers)
                if (u != c && dist[u] >= 1) cnbrs[c].push_back(u);
        }
        luby_ids(level.centers, [&](int c) { return cnbrs[c]; }, seed, &params.K);
    }

    // view radius each vertex may need: distance to its nearest next-center
    // plus the closure margin (plus the Luby dependence radius when centers
    // are recomputed in-view)
    int required = d + S + 2;
    if (params.luby) required += params.K * S;
    int sep = min_center_separation(g, level.centers, required);
    int M_used = M > 0 ? M : (required + sep - 1) / sep + 2;

    BuildLevelResult result;
    int max_retries = 6;
    for (int attempt = 0;; attempt++) {
        std::vector<std::map<long long, BuildDuty>> plans(g.n);
        long long stride = 2LL * d + 1;
        for (int v = 0; v < g.n; v++) {
            auto& w = plans[v];
            const auto& view = views[v];
            int delta = view.depth;
            auto add_downcast = [&](long long t0) {
                if (delta == 0) { w[t0].to_children = true; return; }
                w[t0 + delta - 1]; // listen
                w[t0 + delta].to_children = true;
            };
            auto add_upcast = [&](long long t0) {
                long long send_round = t0 + d - delta;
                if (!view.child_ports.empty()) w[send_round - 1]; // listen
                if (delta > 0) w[send_round].to_parent = true;
                else w[send_round]; // center merge wake
            };
            add_downcast(0);
            add_upcast(d);
            for (int k = 0; k < M_used; k++) {
                long long tau = stride * (k + 1);
                add_downcast(tau);
                w[tau + d].to_boundary = true;
                add_upcast(tau + d + 1);
            }
            long long tau_f = stride * (M_used + 1);
            if (delta > 0) w[tau_f + delta - 1]; // listen to the final downcast
            if (delta == 0) w[tau_f].to_children = true;
            w[tau_f + delta].compute = true;
        }
        ProgramFactory factory = [&](const VertexContext& ctx) -> std::unique_ptr<VertexProc> {
            std::vector<uint64_t> rec;
            rec.push_back((uint64_t)ctx.id);
            rec.push_back((uint64_t)level.center_of[ctx.id]);
            rec.push_back((uint64_t)level.depth_of[ctx.id]);
            rec.push_back(flag[ctx.id] ? 1 : 0);
            rec.push_back((uint64_t)g.adjacency[ctx.id].size());
            for (int u : g.adjacency[ctx.id]) rec.push_back((uint64_t)u);
            return std::make_unique<BuildProc>(plans[ctx.id], views[ctx.id], rec, ctx.id, params);
        };
        result.run = run(g, factory, ModelSpec::local());
        if (result.run.timed_out) throw Error("build_next_level timed out");

        bool ok = true;
        for (int v = 0; v < g.n && ok; v++) {
            if (!result.run.outputs[v] || result.run.outputs[v]->size() != 3) ok = false;
        }
        if (ok) {
            Clustering c;
            c.scale = S;
            c.center_of.assign(g.n, -1);
            c.depth_of.assign(g.n, 0);
            c.parent_of.assign(g.n, -1);
            for (int v = 0; v < g.n; v++) {
                const auto& out = *result.run.outputs[v];
                c.center_of[v] = (int)out[0];
                c.depth_of[v] = (int)out[1];
                c.parent_of[v] = (int)out[2];
                if (c.center_of[v] == v) c.centers.push_back(v);
            }
            result.clustering = std::move(c);
            result.M_used = M_used;
            result.retries = attempt;
            return result;
        }
        if (attempt >= max_retries)
            throw InsufficientView("build_next_level: views still incomplete after " +
                                   std::to_string(attempt + 1) + " attempts (M=" +
                                   std::to_string(M_used) + ")");
        M_used += 2;
    }
}

MultiScaleResult multi_scale(const Graph& g, int i_max, CenterMode mode, uint64_t seed) {
    if (i_max < 0) throw Error("multi_scale requires i_max >= 0");
    MultiScaleResult res;
    Clustering base;
    base.scale = 1;
    base.center_of.resize(g.n);
    base.depth_of.assign(g.n, 0);
    base.parent_of.resize(g.n);
    for (int v = 0; v < g.n; v++) {
        base.center_of[v] = v;
        base.parent_of[v] = v;
        base.centers.push_back(v);
    }
    res.levels.push_back(std::move(base));
    res.level_rounds.push_back(0);
    res.level_energy.push_back(0);
    res.cumulative_energy.push_back(0);
    std::vector<long long> total(g.n, 0);
    for (int i = 1; i <= i_max; i++) {
        auto step = build_next_level(g, res.levels.back(), 1 << (i - 1), 0, mode,
                                     hash_combine(seed, (uint64_t)i));
        res.levels.push_back(std::move(step.clustering));
        res.level_rounds.push_back(step.run.rounds_used);
        res.level_energy.push_back(step.run.energy_complexity);
        long long worst = 0;
        for (int v = 0; v < g.n; v++) {
            total[v] += step.run.energy[v];
            worst = std::max(worst, total[v]);
        }
        res.cumulative_energy.push_back(worst);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Covers

namespace {

CoverView build_cover_core(const Graph& g, int R, int spacing, int ball_radius) {
    if (R < 1 || spacing < 1) throw Error("build_cover requires R >= 1 and spacing >= 1");
    CoverView cov;
    cov.R = R;
    cov.ball_radius = ball_radius;
    cov.centers = mis_power_graph(g, spacing, MisStrategy::GreedyId);
    cov.memberships.assign(g.n, {});
    for (int i = 0; i < (int)cov.centers.size(); i++) {
        auto dist = bfs_distances_bounded(g, cov.centers[i], ball_radius);
        for (int v = 0; v < g.n; v++) {
            if (dist[v] < 0) continue;
            CoverMembership mem;
            mem.cover_id = i;
            mem.depth = dist[v];
            mem.parent = v;
            if (dist[v] > 0) {
                for (int u : g.adjacency[v])
                    if (dist[u] == dist[v] - 1) { mem.parent = u; break; } // sorted: smallest id
            }
            cov.memberships[v].push_back(mem);
        }
    }
    cov.fold = 0;
    cov.home_of.assign(g.n, -1);
    for (int v = 0; v < g.n; v++) {
        cov.fold = std::max(cov.fold, (int)cov.memberships[v].size());
        int best = -1, bd = 0;
        for (const auto& mem : cov.memberships[v])
            if (best < 0 || mem.depth < bd) { best = mem.cover_id; bd = mem.depth; }
        if (best < 0 || bd > spacing || bd + R > ball_radius)
            throw Error("cover construction failed to cover B_R of vertex " + std::to_string(v));
        cov.home_of[v] = best;
    }
    return cov;
}

} // namespace

CoverView build_cover(const Graph& g, int R, int ball_radius_mult) {
    if (ball_radius_mult < 2) throw Error("build_cover requires ball_radius_mult >= 2");
    return build_cover_core(g, R, R, ball_radius_mult * R);
}

CoverView build_cover_spaced(const Graph& g, int R, int spacing) {
    return build_cover_core(g, R, spacing, spacing + R);
}

} // namespace core
