#include "core/cluster_ops.hpp"
#include "core/errors.hpp"

#include <algorithm>
#include <map>

namespace core {

std::vector<ClusterLocalView> make_cluster_views(const Graph& g, const Clustering& c) {
    try {
        validate_clustering(g, c);
    } catch (const Error& e) {
        throw InconsistentTreeView(e.what());
    }
    int n = g.n;
    std::vector<ClusterLocalView> views(n);
    std::map<int, int> cluster_depth;
    for (int v = 0; v < n; v++)
        cluster_depth[c.center_of[v]] = std::max(cluster_depth[c.center_of[v]], c.depth_of[v]);
    for (int v = 0; v < n; v++) {
        ClusterLocalView& view = views[v];
        view.center_id = c.center_of[v];
        view.depth = c.depth_of[v];
        view.d = cluster_depth[c.center_of[v]];
        for (int p = 0; p < (int)g.adjacency[v].size(); p++) {
            int u = g.adjacency[v][p];
            if (c.center_of[u] != c.center_of[v]) {
                view.boundary_ports.push_back(p);
                continue;
            }
            if (v != c.center_of[v] && u == c.parent_of[v]) view.parent_port = p;
            if (c.parent_of[u] == v && u != c.center_of[u]) view.child_ports.push_back(p);
        }
        if (v != c.center_of[v] && view.parent_port < 0)
            throw InconsistentTreeView("vertex " + std::to_string(v) + " cannot find its parent port");
    }
    return views;
}

namespace {

Message encode_words(const std::vector<uint64_t>& words) {
    Message m;
    for (uint64_t w : words) m.push(w, 64);
    return m;
}

std::vector<uint64_t> decode_words(const Message& m) {
    return m.fields;
}

// DOWNCAST(t0): the center sends its state at t0; a vertex at depth delta
// wakes at t0+delta-1 (receives) and t0+delta (forwards / records).
class DowncastProc : public VertexProc {
public:
    DowncastProc(ClusterLocalView view, long long t0, std::vector<uint64_t> state)
        : view_(std::move(view)), t0_(t0), state_(std::move(state)) {}

    long long first_wake() override {
        return view_.depth == 0 ? t0_ : t0_ + view_.depth - 1;
    }

    Action on_wake(long long round, const Inbox& inbox) override {
        Action a;
        if (view_.depth == 0) {
            for (int p : view_.child_ports) a.sends.push_back({p, encode_words(state_)});
            a.output = state_;
            a.halt = true;
            return a;
        }
        if (round == t0_ + view_.depth - 1) {
            a.next_wake = t0_ + view_.depth; // stay awake for the forwarding round
            return a;
        }
        // second wake: the parent's payload arrived in the previous round
        std::vector<uint64_t> payload;
        for (const auto& [port, msg] : inbox.items)
            if (port == view_.parent_port) payload = decode_words(msg);
        for (int p : view_.child_ports) a.sends.push_back({p, encode_words(payload)});
        a.output = payload;
        a.halt = true;
        return a;
    }

private:
    ClusterLocalView view_;
    long long t0_;
    std::vector<uint64_t> state_;
};

// UPCAST(t0): a leaf at depth delta sends at t0+d-delta; an inner vertex
// wakes at t0+d-delta-1 (receives its children) and t0+d-delta (merges and
// forwards). The center outputs the merged multiset at t0+d.
class UpcastProc : public VertexProc {
public:
    UpcastProc(ClusterLocalView view, long long t0, std::vector<uint64_t> state)
        : view_(std::move(view)), t0_(t0), state_(std::move(state)) {}

    long long first_wake() override {
        long long send_round = t0_ + view_.d - view_.depth;
        return view_.child_ports.empty() ? send_round : send_round - 1;
    }

    Action on_wake(long long round, const Inbox& inbox) override {
        Action a;
        long long send_round = t0_ + view_.d - view_.depth;
        if (!view_.child_ports.empty() && round == send_round - 1) {
            a.next_wake = send_round;
            return a;
        }
        std::vector<uint64_t> merged = state_;
        for (const auto& [port, msg] : inbox.items) {
            auto words = decode_words(msg);
            merged.insert(merged.end(), words.begin(), words.end());
        }
        std::sort(merged.begin(), merged.end());
        if (view_.depth == 0) {
            a.output = merged;
        } else {
            a.sends.push_back({view_.parent_port, encode_words(merged)});
            a.output = state_;
        }
        a.halt = true;
        return a;
    }

private:
    ClusterLocalView view_;
    long long t0_;
    std::vector<uint64_t> state_;
};

// INTERCAST(t0): one round; boundary vertices exchange states with their
// out-of-cluster neighbors. Reception is folded into the halting round.
class IntercastProc : public VertexProc {
public:
    IntercastProc(ClusterLocalView view, long long t0, std::vector<uint64_t> state,
                  std::vector<int> neighbor_ids)
        : view_(std::move(view)), t0_(t0), state_(std::move(state)),
          neighbor_ids_(std::move(neighbor_ids)) {}

    long long first_wake() override { return t0_; }

    Action on_wake(long long, const Inbox&) override {
        Action a;
        Message m = encode_words(state_);
        for (int p : view_.boundary_ports) a.sends.push_back({p, m});
        a.output = std::vector<uint64_t>{};
        a.halt = true;
        return a;
    }

    std::optional<std::vector<uint64_t>> on_halt_inbox(long long, const Inbox& inbox) override {
        // records of (neighbor id, payload length, payload...)
        std::vector<std::vector<uint64_t>> recs;
        for (const auto& [port, msg] : inbox.items) {
            std::vector<uint64_t> rec;
            rec.push_back((uint64_t)neighbor_ids_[port]);
            auto words = decode_words(msg);
            rec.push_back((uint64_t)words.size());
            rec.insert(rec.end(), words.begin(), words.end());
            recs.push_back(std::move(rec));
        }
        std::sort(recs.begin(), recs.end());
        std::vector<uint64_t> out;
        for (auto& r : recs) out.insert(out.end(), r.begin(), r.end());
        return out;
    }

private:
    ClusterLocalView view_;
    long long t0_;
    std::vector<uint64_t> state_;
    std::vector<int> neighbor_ids_;
};

} // namespace

ClusterOpResult dist_cluster_op(const Graph& g, const Clustering& c, ClusterOpKind kind,
                                long long t0, const std::vector<std::vector<uint64_t>>& state,
                                const RunOptions& opts) {
    if ((int)state.size() != g.n) throw Error("dist_cluster_op: one state per vertex required");
    auto views = make_cluster_views(g, c);
    ProgramFactory factory = [&](const VertexContext& ctx) -> std::unique_ptr<VertexProc> {
        switch (kind) {
            case ClusterOpKind::Downcast:
                return std::make_unique<DowncastProc>(views[ctx.id], t0, state[ctx.id]);
            case ClusterOpKind::Upcast:
                return std::make_unique<UpcastProc>(views[ctx.id], t0, state[ctx.id]);
            default: {
                std::vector<int> nbr(g.adjacency[ctx.id].begin(), g.adjacency[ctx.id].end());
                return std::make_unique<IntercastProc>(views[ctx.id], t0, state[ctx.id], nbr);
            }
        }
    };
    ClusterOpResult res;
    res.run = run(g, factory, ModelSpec::local(), opts);
    res.outputs.assign(g.n, {});
    for (int v = 0; v < g.n; v++)
        if (res.run.outputs[v]) res.outputs[v] = *res.run.outputs[v];
    return res;
}

} // namespace core
