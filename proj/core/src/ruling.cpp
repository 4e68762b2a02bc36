#include "core/distalgo.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace core {

namespace {

enum : uint64_t { kActive = 0, kInMis = 1, kCovered = 2 };

// Luby over an id-keyed member set (randomness keyed by member id so the
// distributed run draws identical values).
std::vector<int> luby_members(const std::vector<int>& ids,
                              const std::map<int, std::vector<int>>& nbrs,
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
            for (int u : nbrs.at(v)) {
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
            for (int u : nbrs.at(v))
                if (active[u]) { active[u] = 0; remaining--; }
        }
        round++;
        if (round > 64 * 64 && remaining > 0) throw Error("luby_members failed to converge");
    }
    if (rounds_used) *rounds_used = round;
    std::vector<int> out;
    for (int v : ids)
        if (in_mis[v]) out.push_back(v);
    return out;
}

struct RulingConfig {
    int gamma = 1;       // independence radius 2^i
    int K = 0;           // Luby power rounds
    long long L = 1;     // rounds per flood window (gamma, plus slack in CONGEST)
    bool congest = false;
    uint64_t seed = 0;
    int idbits = 1;
    int hbits = 1;
};

// Two flood windows per Luby power round: window 2r propagates the joins of
// round r-1 (members mark themselves covered), window 2r+1 propagates the
// surviving active set (members decide round r). Non-members relay only.
// Floods are incremental: an entry is forwarded once per window per vertex.
class RulingProc : public VertexProc {
public:
    RulingProc(const RulingConfig& cfg, int id, int degree, bool member)
        : cfg_(cfg), id_(id), degree_(degree), member_(member) {
        if (cfg_.congest) queues_.resize(degree_);
    }

    long long first_wake() override { return 0; }

    Action on_wake(long long round, const Inbox& inbox) override {
        // merge: entry (id, status, hop) heard at hop h means distance h+1
        std::vector<std::array<uint64_t, 3>> improved;
        auto absorb = [&](uint64_t uid, uint64_t st, int dist) {
            auto it = know_.find((int)uid);
            if (it == know_.end() || it->second.second > dist) {
                know_[(int)uid] = {st, dist};
                if (dist < cfg_.gamma) improved.push_back({uid, st, (uint64_t)dist});
            }
        };
        for (const auto& [port, msg] : inbox.items) {
            if (cfg_.congest) {
                absorb(msg.get(0), msg.get(1), (int)msg.get(2) + 1);
            } else {
                for (size_t i = 0; i + 3 <= msg.size(); i += 3)
                    absorb(msg.get(i), msg.get(i + 1), (int)msg.get(i + 2) + 1);
            }
        }

        long long r = round / (2 * cfg_.L);
        long long off = round % (2 * cfg_.L);
        if (off == 0) {
            if (member_ && r > 0 && status_ == kActive) {
                uint64_t mine = luby_value(cfg_.seed, id_, (int)r - 1);
                bool win = true;
                for (auto& [u, e] : know_) {
                    if (u == id_ || e.first != kActive || e.second > cfg_.gamma) continue;
                    uint64_t theirs = luby_value(cfg_.seed, u, (int)r - 1);
                    if (theirs < mine || (theirs == mine && u < id_)) { win = false; break; }
                }
                if (win) status_ = kInMis;
            }
            reset_window(improved);
        } else if (off == cfg_.L) {
            if (member_ && status_ == kActive) {
                for (auto& [u, e] : know_)
                    if (u != id_ && e.first == kInMis && e.second <= cfg_.gamma) {
                        status_ = kCovered;
                        break;
                    }
            }
            reset_window(improved);
        }

        Action a;
        if (round == 2 * cfg_.L * cfg_.K) {
            a.output = std::vector<uint64_t>{member_ && status_ == kInMis ? 1ull : 0ull};
            a.halt = true;
            return a;
        }
        if (cfg_.congest) {
            for (auto& e : improved)
                for (auto& q : queues_) q.push_back(e);
            for (int p = 0; p < degree_; p++) {
                if (queues_[p].empty()) continue;
                auto e = queues_[p].front();
                queues_[p].pop_front();
                Message m;
                m.push(e[0], cfg_.idbits);
                m.push(e[1], 2);
                m.push(e[2], cfg_.hbits);
                a.sends.push_back({p, m});
            }
        } else if (!improved.empty()) {
            Message m;
            for (auto& e : improved) {
                m.push(e[0], 64);
                m.push(e[1], 64);
                m.push(e[2], 64);
            }
            for (int p = 0; p < degree_; p++) a.sends.push_back({p, m});
        }
        a.next_wake = round + 1;
        return a;
    }

private:
    void reset_window(std::vector<std::array<uint64_t, 3>>& improved) {
        know_.clear();
        improved.clear();
        if (cfg_.congest)
            for (auto& q : queues_) q.clear();
        if (member_) {
            know_[id_] = {status_, 0};
            improved.push_back({(uint64_t)id_, status_, 0});
        }
    }

    RulingConfig cfg_;
    int id_;
    int degree_;
    bool member_;
    uint64_t status_ = kActive;
    std::map<int, std::pair<uint64_t, int>> know_; // id -> (status, dist)
    std::vector<std::deque<std::array<uint64_t, 3>>> queues_;
};

void validate_ruling_level(const Graph& g, const std::vector<int>& S, int i) {
    if (S.empty()) throw RulingViolation("level " + std::to_string(i) + " is empty");
    int min_sep = i >= 1 ? (1 << (i - 1)) + 1 : 1;
    int coverage = (1 << i) - 1;
    std::vector<char> member(g.n, 0);
    for (int v : S) member[v] = 1;
    if (min_sep > 1) {
        for (int v : S) {
            auto dist = bfs_distances_bounded(g, v, min_sep - 1);
            for (int u = 0; u < g.n; u++)
                if (u != v && member[u] && dist[u] >= 0)
                    throw RulingViolation("level " + std::to_string(i) + ": members " +
                                          std::to_string(v) + " and " + std::to_string(u) +
                                          " are only " + std::to_string(dist[u]) + " apart");
        }
    }
    // coverage: multi-source BFS from S bounded by 2^i - 1 must reach everyone
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    for (int v : S) { dist[v] = 0; q.push(v); }
    while (!q.empty()) {
        int u = q.front(); q.pop();
        if (dist[u] == coverage) continue;
        for (int x : g.adjacency[u])
            if (dist[x] < 0) { dist[x] = dist[u] + 1; q.push(x); }
    }
    for (int v = 0; v < g.n; v++)
        if (dist[v] < 0)
            throw RulingViolation("level " + std::to_string(i) + ": vertex " +
                                  std::to_string(v) + " is farther than " +
                                  std::to_string(coverage) + " from the set");
}

} // namespace

RulingHierarchy ruling_hierarchy(const Graph& g, int i_max, ModelKind model, uint64_t seed) {
    if (i_max < 0) throw Error("ruling_hierarchy requires i_max >= 0");
    if (model == ModelKind::RadioCongest)
        throw Error("ruling_hierarchy supports the LOCAL and CONGEST models");
    RulingHierarchy h;
    RulingLevel base;
    for (int v = 0; v < g.n; v++) base.set.push_back(v);
    base.clustering = voronoi(g, base.set);
    base.clustering.scale = 1;
    h.levels.push_back(std::move(base));
    validate_ruling_level(g, h.levels[0].set, 0);

    int idbits = 1;
    while ((1 << idbits) < g.n) idbits++;

    for (int i = 0; i < i_max; i++) {
        const std::vector<int>& S = h.levels[i].set;
        int gamma = 1 << i;
        uint64_t level_seed = hash_combine(seed, (uint64_t)i);

        std::map<int, std::vector<int>> nbrs;
        long long maxload = 0;
        {
            std::vector<char> member(g.n, 0);
            for (int v : S) member[v] = 1;
            std::vector<long long> load(g.n, 0);
            for (int v : S) {
                auto dist = bfs_distances_bounded(g, v, gamma);
                nbrs[v] = {};
                for (int u = 0; u < g.n; u++) {
                    if (dist[u] < 0) continue;
                    load[u]++;
                    if (u != v && member[u]) nbrs[v].push_back(u);
                }
            }
            for (int v = 0; v < g.n; v++) maxload = std::max(maxload, load[v]);
        }
        RulingConfig cfg;
        cfg.gamma = gamma;
        cfg.seed = level_seed;
        cfg.congest = model == ModelKind::Congest;
        cfg.idbits = idbits;
        cfg.hbits = 1;
        while ((1 << cfg.hbits) < gamma + 1) cfg.hbits++;
        std::vector<int> expected = luby_members(S, nbrs, level_seed, &cfg.K);

        std::vector<char> member(g.n, 0);
        for (int v : S) member[v] = 1;
        RulingLevel next;
        cfg.L = cfg.congest ? gamma + maxload + 4 : gamma;
        for (int attempt = 0;; attempt++) {
            ProgramFactory factory = [&](const VertexContext& ctx) -> std::unique_ptr<VertexProc> {
                return std::make_unique<RulingProc>(cfg, ctx.id, ctx.degree, member[ctx.id] != 0);
            };
            SimRun run_res = run(g, factory,
                                 cfg.congest ? ModelSpec::congest() : ModelSpec::local());
            if (run_res.timed_out) throw Error("ruling_hierarchy timed out");
            std::vector<int> chosen;
            for (int v = 0; v < g.n; v++)
                if (run_res.outputs[v] && !run_res.outputs[v]->empty() &&
                    (*run_res.outputs[v])[0] == 1)
                    chosen.push_back(v);
            if (chosen == expected) {
                next.set = std::move(chosen);
                next.rounds = run_res.rounds_used;
                next.phase_length = cfg.L;
                break;
            }
            if (!cfg.congest || attempt >= 4)
                throw RulingViolation("level " + std::to_string(i + 1) +
                                      ": simulated Luby outcome diverged from the reference");
            cfg.L += maxload + 4; // pipeline was too short; widen and retry
        }
        next.clustering = voronoi(g, next.set);
        next.clustering.scale = std::max(1, (1 << (i + 1)) - 1);
        validate_ruling_level(g, next.set, i + 1);
        h.levels.push_back(std::move(next));
    }
    return h;
}

} // namespace core
