#include "core/simkernel.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>

namespace core {

void Message::push(uint64_t value, int nbits) {
    if (nbits < 1 || nbits > 64) throw Error("message field width must be 1..64 bits");
    if (nbits < 64 && value >> nbits) throw Error("message field value does not fit its declared width");
    fields.push_back(value);
    widths.push_back((uint8_t)nbits);
    bits += nbits;
}

namespace {

int port_of(const Graph& g, int u, int v) {
    const auto& a = g.adjacency[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    return (int)(it - a.begin());
}

} // namespace

SimRun run(const Graph& g, const ProgramFactory& program, const ModelSpec& model,
           const RunOptions& opts, uint64_t seed) {
    if (opts.max_rounds < 1) throw Error("max_rounds must be >= 1");
    int n = g.n;
    long long bandwidth = model.bandwidth_bits;
    long long idbits = 1;
    while ((1LL << idbits) < n) idbits++;
    if (bandwidth == 0) bandwidth = 8 * idbits;
    if (model.kind != ModelKind::Local && bandwidth < idbits)
        throw Error("bandwidth_bits must fit a vertex id");

    SimRun out;
    out.outputs.assign(n, std::nullopt);
    out.energy.assign(n, 0);

    std::vector<std::unique_ptr<VertexProc>> procs(n);
    std::vector<long long> next_wake(n);
    std::vector<char> halted(n, 0);
    std::vector<Inbox> buffer(n);
    int live = n;

    // wake agenda: (round, vertex)
    std::priority_queue<std::pair<long long, int>, std::vector<std::pair<long long, int>>,
                        std::greater<>> agenda;
    for (int v = 0; v < n; v++) {
        VertexContext ctx{v, (int)g.adjacency[v].size(), hash_combine(seed, (uint64_t)v)};
        procs[v] = program(ctx);
        next_wake[v] = procs[v]->first_wake();
        if (next_wake[v] < 0) throw Error("first_wake must be >= 0");
        agenda.push({next_wake[v], v});
    }

    long long round = -1;
    while (live > 0 && !agenda.empty()) {
        long long t = agenda.top().first;
        if (t >= opts.max_rounds) { out.timed_out = true; break; }
        round = t;
        // collect the awake set for this round
        std::vector<int> awake;
        while (!agenda.empty() && agenda.top().first == t) {
            int v = agenda.top().second;
            agenda.pop();
            if (!halted[v] && next_wake[v] == t) awake.push_back(v);
        }
        std::sort(awake.begin(), awake.end());
        awake.erase(std::unique(awake.begin(), awake.end()), awake.end());
        std::vector<char> awake_now(n, 0);
        for (int v : awake) awake_now[v] = 1;

        // phase 1: all awake vertices act (based on previously buffered inbox)
        std::vector<Action> actions(awake.size());
        for (size_t i = 0; i < awake.size(); i++) {
            int v = awake[i];
            out.energy[v]++;
            if (opts.record_trace) out.trace.push_back({t, v, "wake", 0});
            Inbox in;
            in.items.swap(buffer[v].items);
            actions[i] = procs[v]->on_wake(t, in);
        }

        // phase 2: validate sends and deliver to receivers awake this round
        // RADIO: precompute transmitters
        std::vector<char> transmitting(n, 0);
        if (model.kind == ModelKind::RadioCongest) {
            for (size_t i = 0; i < awake.size(); i++) {
                if (actions[i].sends.size() > 1) throw MultiSendInRadio();
                if (!actions[i].sends.empty()) {
                    if (actions[i].sends[0].first != kBroadcastPort)
                        throw Error("RADIO sends must use the broadcast port");
                    if (actions[i].sends[0].second.bits > bandwidth)
                        throw BandwidthExceeded("radio payload of " +
                            std::to_string(actions[i].sends[0].second.bits) + " bits exceeds " +
                            std::to_string(bandwidth));
                    transmitting[awake[i]] = 1;
                }
            }
            for (size_t i = 0; i < awake.size(); i++) {
                int v = awake[i];
                if (transmitting[v]) continue; // a transmitter cannot receive
                int tx_count = 0, tx_from = -1;
                for (int u : g.adjacency[v]) {
                    if (awake_now[u] && transmitting[u]) { tx_count++; tx_from = u; }
                }
                if (tx_count == 1) {
                    // locate the sender's message
                    for (size_t j = 0; j < awake.size(); j++) {
                        if (awake[j] == tx_from) {
                            buffer[v].items.push_back({port_of(g, v, tx_from),
                                                       actions[j].sends[0].second});
                            if (opts.record_trace)
                                out.trace.push_back({t, v, "recv", actions[j].sends[0].second.bits});
                            break;
                        }
                    }
                } else if (tx_count > 1 && opts.record_trace) {
                    out.trace.push_back({t, v, "collision", 0});
                }
            }
            if (opts.record_trace) {
                for (size_t i = 0; i < awake.size(); i++)
                    if (transmitting[awake[i]])
                        out.trace.push_back({t, awake[i], "send", actions[i].sends[0].second.bits});
            }
        } else {
            for (size_t i = 0; i < awake.size(); i++) {
                int v = awake[i];
                std::vector<char> port_used(g.adjacency[v].size(), 0);
                for (auto& [port, msg] : actions[i].sends) {
                    if (port < 0 || port >= (int)g.adjacency[v].size())
                        throw Error("send port out of range");
                    if (port_used[port]) throw Error("at most one message per port per round");
                    port_used[port] = 1;
                    if (model.kind == ModelKind::Congest && msg.bits > bandwidth)
                        throw BandwidthExceeded("payload of " + std::to_string(msg.bits) +
                                                " bits exceeds " + std::to_string(bandwidth));
                    if (opts.record_trace) out.trace.push_back({t, v, "send", msg.bits});
                    int u = g.adjacency[v][port];
                    if (awake_now[u] && !halted[u]) {
                        buffer[u].items.push_back({port_of(g, u, v), msg});
                        if (opts.record_trace) out.trace.push_back({t, u, "recv", msg.bits});
                    }
                    // asleep receivers lose the message
                }
            }
        }

        // phase 3: apply schedules, outputs, halts
        for (size_t i = 0; i < awake.size(); i++) {
            int v = awake[i];
            if (actions[i].output) out.outputs[v] = actions[i].output;
            if (actions[i].halt) {
                halted[v] = 1;
                live--;
                if (!buffer[v].items.empty()) {
                    Inbox in;
                    in.items.swap(buffer[v].items);
                    auto final_out = procs[v]->on_halt_inbox(t, in);
                    if (final_out) out.outputs[v] = final_out;
                }
                if (opts.record_trace) out.trace.push_back({t, v, "halt", 0});
            } else {
                if (actions[i].next_wake <= t)
                    throw Error("next_wake must be a later round (or halt)");
                next_wake[v] = actions[i].next_wake;
                agenda.push({next_wake[v], v});
            }
        }
    }
    out.rounds_used = round + 1;
    if (!out.trace.empty()) {
        std::stable_sort(out.trace.begin(), out.trace.end(), [](const TraceEvent& a, const TraceEvent& b) {
            if (a.round != b.round) return a.round < b.round;
            if (a.vertex != b.vertex) return a.vertex < b.vertex;
            return a.event < b.event;
        });
    }
    for (long long e : out.energy) out.energy_complexity = std::max(out.energy_complexity, e);
    return out;
}

std::string energy_report(const SimRun& run) {
    std::ostringstream os;
    os << "vertex energy\n";
    long long total = 0;
    for (size_t v = 0; v < run.energy.size(); v++) {
        os << v << ' ' << run.energy[v] << '\n';
        total += run.energy[v];
    }
    os << "max " << run.energy_complexity << '\n';
    os << "mean " << (run.energy.empty() ? 0.0 : (double)total / (double)run.energy.size()) << '\n';
    return os.str();
}

std::string format_trace(const SimRun& run) {
    std::ostringstream os;
    for (const auto& e : run.trace)
        os << e.round << ' ' << e.vertex << ' ' << e.event << ' ' << e.payload_bits << '\n';
    return os.str();
}

} // namespace core
