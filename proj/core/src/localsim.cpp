#include "core/distalgo.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace core {

namespace {

int port_toward(const std::vector<int>& sorted_nbrs, int u) {
    auto it = std::lower_bound(sorted_nbrs.begin(), sorted_nbrs.end(), u);
    if (it == sorted_nbrs.end() || *it != u) throw Error("port_toward: not a neighbor");
    return (int)(it - sorted_nbrs.begin());
}

// Adapter running the explicit-state target with every vertex awake for all
// rounds 0..T (round T consumes the final receptions and sets the output).
class DirectTargetProc : public VertexProc {
public:
    DirectTargetProc(const TargetProgram& target, VertexContext ctx, long long T)
        : target_(target), ctx_(ctx), T_(T) {}

    Action on_wake(long long round, const Inbox& inbox) override {
        TargetStep step = target_(ctx_, state_, round, inbox.items);
        Action a;
        if (round < T_) a.sends = std::move(step.sends);
        if (step.output) a.output = step.output;
        if (round == T_) a.halt = true;
        else a.next_wake = round + 1;
        return a;
    }

private:
    const TargetProgram& target_;
    VertexContext ctx_;
    long long T_;
    std::vector<uint64_t> state_;
};

} // namespace

SimRun run_target_direct(const Graph& g, const TargetProgram& target, long long T,
                         uint64_t seed) {
    if (T < 1) throw Error("run_target_direct requires T >= 1");
    ProgramFactory factory = [&](const VertexContext& ctx) -> std::unique_ptr<VertexProc> {
        return std::make_unique<DirectTargetProc>(target, ctx, T);
    };
    RunOptions opts;
    opts.max_rounds = T + 2;
    return run(g, factory, ModelSpec::local(), opts, seed);
}

namespace {

// Snapshot of one vertex at a segment boundary: its target state plus the
// messages it would consume in the boundary round.
struct Snapshot {
    int seg = 0;
    std::vector<int> nbrs;
    std::vector<uint64_t> state;
    std::vector<std::pair<int, Message>> pending; // keyed by sender id
};

void encode_snapshot(std::vector<uint64_t>& out, int id, const Snapshot& s) {
    out.push_back((uint64_t)id);
    out.push_back((uint64_t)s.seg);
    out.push_back((uint64_t)s.nbrs.size());
    for (int u : s.nbrs) out.push_back((uint64_t)u);
    out.push_back((uint64_t)s.state.size());
    out.insert(out.end(), s.state.begin(), s.state.end());
    out.push_back((uint64_t)s.pending.size());
    for (const auto& [sender, msg] : s.pending) {
        out.push_back((uint64_t)sender);
        out.push_back((uint64_t)msg.size());
        for (size_t i = 0; i < msg.size(); i++) {
            out.push_back(msg.fields[i]);
            out.push_back((uint64_t)msg.widths[i]);
        }
    }
}

void merge_snapshot_words(std::map<int, Snapshot>& know, const std::vector<uint64_t>& words) {
    size_t i = 0;
    while (i < words.size()) {
        int id = (int)words[i++];
        Snapshot s;
        s.seg = (int)words[i++];
        size_t deg = words[i++];
        for (size_t j = 0; j < deg; j++) s.nbrs.push_back((int)words[i++]);
        size_t slen = words[i++];
        for (size_t j = 0; j < slen; j++) s.state.push_back(words[i++]);
        size_t pcount = words[i++];
        for (size_t j = 0; j < pcount; j++) {
            int sender = (int)words[i++];
            size_t nf = words[i++];
            Message m;
            for (size_t f = 0; f < nf; f++) {
                uint64_t value = words[i++];
                int width = (int)words[i++];
                m.push(value, width);
            }
            s.pending.push_back({sender, std::move(m)});
        }
        if (i > words.size()) throw Error("malformed snapshot record");
        auto it = know.find(id);
        if (it == know.end() || it->second.seg < s.seg) know[id] = std::move(s);
    }
}

struct SimDuty {
    std::set<int> send_ports;
    int advance_seg = -1; // advance own snapshot past segment k when >= 0
    bool last = false;
};

class LocalSimProc : public VertexProc {
public:
    LocalSimProc(const TargetProgram& target, VertexContext ctx, std::vector<int> nbrs,
                 std::map<long long, SimDuty> wakes, int t, int segments, uint64_t seed)
        : target_(target), ctx_(ctx), nbrs_(std::move(nbrs)), wakes_(std::move(wakes)),
          t_(t), segments_(segments), seed_(seed) {
        Snapshot own;
        own.nbrs = nbrs_;
        know_[ctx_.id] = std::move(own);
    }

    long long first_wake() override { return wakes_.begin()->first; }

    Action on_wake(long long round, const Inbox& inbox) override {
        for (const auto& [port, msg] : inbox.items) merge_snapshot_words(know_, msg.fields);
        auto it = wakes_.find(round);
        if (it == wakes_.end()) throw Error("local sim proc woke in an unscheduled round");
        const SimDuty& duty = it->second;
        Action a;
        if (!duty.send_ports.empty()) {
            std::vector<uint64_t> words;
            for (const auto& [id, snap] : know_) encode_snapshot(words, id, snap);
            Message m;
            for (uint64_t w : words) m.push(w, 64);
            for (int p : duty.send_ports) a.sends.push_back({p, m});
        }
        if (duty.advance_seg >= 0) advance(duty.advance_seg);
        if (last_output_) a.output = last_output_;
        auto nx = std::next(it);
        if (nx == wakes_.end()) a.halt = true;
        else a.next_wake = nx->first;
        return a;
    }

private:
    // advance the own snapshot across segment k by locally simulating B_t
    void advance(int k) {
        // enumerate B_t(id) over the known topology
        std::map<int, int> dist;
        std::queue<int> q;
        dist[ctx_.id] = 0;
        q.push(ctx_.id);
        while (!q.empty()) {
            int u = q.front(); q.pop();
            if (dist[u] == t_) continue;
            auto it = know_.find(u);
            if (it == know_.end())
                throw Error("local sim: missing snapshot for vertex " + std::to_string(u));
            for (int x : it->second.nbrs)
                if (!dist.count(x)) { dist[x] = dist[u] + 1; q.push(x); }
        }
        std::vector<int> ball;
        for (auto& [u, d] : dist) ball.push_back(u);
        std::map<int, Snapshot> local;
        for (int u : ball) {
            auto it = know_.find(u);
            if (it == know_.end() || it->second.seg < k)
                throw Error("local sim: stale snapshot for vertex " + std::to_string(u));
            local[u] = it->second;
        }
        // t exact rounds for the own trajectory; peripheral vertices drift
        // only outside the radius that can influence it
        std::map<int, std::vector<std::pair<int, Message>>> inboxes, next;
        for (int u : ball) {
            // pending is keyed by sender id; the target expects ports
            for (const auto& [sender, msg] : local[u].pending)
                inboxes[u].push_back({port_toward(local[u].nbrs, sender), msg});
        }
        for (int r = 0; r < t_; r++) {
            long long round = (long long)k * t_ + r;
            next.clear();
            for (int u : ball) {
                VertexContext c{u, (int)local[u].nbrs.size(), hash_combine(seed_, (uint64_t)u)};
                TargetStep step = target_(c, local[u].state, round, inboxes[u]);
                for (auto& [port, msg] : step.sends) {
                    if (port < 0 || port >= (int)local[u].nbrs.size())
                        throw Error("target send port out of range");
                    int recv = local[u].nbrs[port];
                    if (local.count(recv))
                        next[recv].push_back({port_toward(local[recv].nbrs, u), std::move(msg)});
                }
                if (u == ctx_.id && step.output) last_output_ = step.output;
            }
            for (int u : ball) inboxes[u] = std::move(next[u]);
        }
        Snapshot& own = know_[ctx_.id];
        own.seg = k + 1;
        own.state = local[ctx_.id].state;
        own.pending.clear();
        for (auto& [port, msg] : inboxes[ctx_.id])
            own.pending.push_back({own.nbrs[port], msg});
        if (k == segments_ - 1) {
            // boundary round T: consume the final receptions, no sends
            VertexContext c{ctx_.id, (int)own.nbrs.size(), hash_combine(seed_, (uint64_t)ctx_.id)};
            std::vector<std::pair<int, Message>> final_inbox = inboxes[ctx_.id];
            TargetStep step = target_(c, own.state, (long long)segments_ * t_, final_inbox);
            if (step.output) last_output_ = step.output;
        }
    }

    const TargetProgram& target_;
    VertexContext ctx_;
    std::vector<int> nbrs_;
    std::map<long long, SimDuty> wakes_;
    int t_;
    int segments_;
    uint64_t seed_;
    std::map<int, Snapshot> know_;
    std::optional<std::vector<uint64_t>> last_output_;
};

} // namespace

LocalSimResult simulate_local_algorithm(const Graph& g, const TargetProgram& target,
                                        int t, int segments, uint64_t seed,
                                        const CoverView* cover) {
    if (t < 1 || segments < 1) throw Error("simulate_local_algorithm requires t, segments >= 1");
    LocalSimResult res;
    res.cover = cover ? *cover : build_cover_spaced(g, t, 4 * t);
    const CoverView& cov = res.cover;
    if (cov.R < t) throw Error("cover radius too small for the segment length");
    int n = g.n;
    int nc = (int)cov.centers.size();

    // per-cluster membership lookup and home sets
    std::vector<std::map<int, CoverMembership>> mem_of(nc); // vertex -> membership
    for (int v = 0; v < n; v++)
        for (const auto& mem : cov.memberships[v]) mem_of[mem.cover_id][v] = mem;
    std::vector<std::vector<int>> home_set(nc);
    for (int v = 0; v < n; v++) home_set[cov.home_of[v]].push_back(v);

    int D = 0;
    for (int v = 0; v < n; v++)
        for (const auto& mem : cov.memberships[v]) D = std::max(D, mem.depth);

    // participants: contributors (within t of the home set) for the upcast,
    // home vertices for the downcast, each closed under tree ancestors
    std::vector<std::set<int>> up_part(nc), down_part(nc);
    for (int c = 0; c < nc; c++) {
        std::set<int> contrib;
        {
            std::map<int, int> dist;
            std::queue<int> q;
            for (int v : home_set[c]) { dist[v] = 0; q.push(v); }
            while (!q.empty()) {
                int u = q.front(); q.pop();
                if (dist[u] == t) continue;
                for (int x : g.adjacency[u])
                    if (!dist.count(x)) { dist[x] = dist[u] + 1; q.push(x); }
            }
            for (auto& [u, dd] : dist) contrib.insert(u);
        }
        auto close_ancestors = [&](const std::set<int>& base, std::set<int>& out) {
            for (int v : base) {
                int u = v;
                while (true) {
                    auto it = mem_of[c].find(u);
                    if (it == mem_of[c].end())
                        throw Error("participant outside its cover ball");
                    if (!out.insert(u).second) break;
                    if (it->second.depth == 0) break;
                    u = it->second.parent;
                }
            }
        };
        close_ancestors(contrib, up_part[c]);
        std::set<int> home(home_set[c].begin(), home_set[c].end());
        close_ancestors(home, down_part[c]);
    }

    // effective tree children restricted to the participant sets
    auto children_in = [&](int c, int v, const std::set<int>& part) {
        std::vector<int> out;
        for (int u : g.adjacency[v]) {
            if (!part.count(u)) continue;
            auto it = mem_of[c].find(u);
            if (it != mem_of[c].end() && it->second.depth > 0 && it->second.parent == v)
                out.push_back(u);
        }
        return out;
    };

    long long window = 2LL * D + 1;
    std::vector<std::map<long long, SimDuty>> plans(n);
    for (int k = 0; k < segments; k++) {
        long long b = (long long)k * window;
        for (int c = 0; c < nc; c++) {
            for (int v : up_part[c]) {
                int delta = mem_of[c][v].depth;
                bool has_kids = !children_in(c, v, up_part[c]).empty();
                long long send_round = b + D - delta;
                if (has_kids) plans[v][send_round - 1]; // listen
                if (delta > 0)
                    plans[v][send_round].send_ports.insert(
                        port_toward(g.adjacency[v], mem_of[c][v].parent));
                else
                    plans[v][send_round]; // center merge (combined with the downcast below)
            }
            for (int v : down_part[c]) {
                int delta = mem_of[c][v].depth;
                long long act_round = b + D + delta;
                if (delta > 0) plans[v][act_round - 1]; // listen
                auto& duty = plans[v][act_round];
                for (int u : children_in(c, v, down_part[c]))
                    duty.send_ports.insert(port_toward(g.adjacency[v], u));
                if (cov.home_of[v] == c) duty.advance_seg = k;
            }
        }
    }

    ProgramFactory factory = [&](const VertexContext& ctx) -> std::unique_ptr<VertexProc> {
        std::vector<int> nbrs(g.adjacency[ctx.id].begin(), g.adjacency[ctx.id].end());
        return std::make_unique<LocalSimProc>(target, ctx, std::move(nbrs), plans[ctx.id],
                                              t, segments, seed);
    };
    RunOptions opts;
    opts.max_rounds = (long long)segments * window + 2 * D + 4;
    res.run = run(g, factory, ModelSpec::local(), opts, seed);
    if (res.run.timed_out) throw Error("simulate_local_algorithm timed out");
    return res;
}

} // namespace core
