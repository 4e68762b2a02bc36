#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/simkernel.hpp"

#include <algorithm>
#include <set>

using namespace core;

namespace {

// transmits its id in round 0 (if told to), reports everything it heard
class Probe : public VertexProc {
public:
    Probe(int id, bool transmit, bool radio) : id_(id), transmit_(transmit), radio_(radio) {}
    Action on_wake(long long, const Inbox&) override {
        Action a;
        if (transmit_) {
            Message m;
            m.push((uint64_t)id_, 8);
            if (radio_)
                a.sends.push_back({kBroadcastPort, m});
            else
                a.sends.push_back({0, m});
        }
        a.output = std::vector<uint64_t>{};
        a.halt = true;
        return a;
    }
    std::optional<std::vector<uint64_t>> on_halt_inbox(long long, const Inbox& inbox) override {
        std::vector<uint64_t> heard;
        for (const auto& [port, msg] : inbox.items) heard.push_back(msg.get(0));
        std::sort(heard.begin(), heard.end());
        return heard;
    }

private:
    int id_;
    bool transmit_;
    bool radio_;
};

SimRun radio_round(const Graph& g, const std::vector<bool>& transmit) {
    ProgramFactory f = [&](const VertexContext& ctx) -> std::unique_ptr<VertexProc> {
        return std::make_unique<Probe>(ctx.id, transmit[ctx.id], true);
    };
    return run(g, f, ModelSpec::radio());
}

} // namespace

TEST_CASE("radio reception rules") {
    // two transmitters: each is transmitting, neither receives
    Graph p2 = gen_path(2);
    SimRun both = radio_round(p2, {true, true});
    CHECK(both.outputs[0] == std::vector<uint64_t>{});
    CHECK(both.outputs[1] == std::vector<uint64_t>{});

    // star: 0 center, leaves 1..3
    Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    SimRun collision = radio_round(star, {false, true, true, true});
    CHECK(collision.outputs[0] == std::vector<uint64_t>{});

    SimRun sole = radio_round(star, {false, true, false, false});
    CHECK(sole.outputs[0] == std::vector<uint64_t>{1});
}

TEST_CASE("radio rejects multiple broadcasts per round") {
    Graph p2 = gen_path(2);
    ProgramFactory f = [&](const VertexContext&) -> std::unique_ptr<VertexProc> {
        struct Bad : VertexProc {
            Action on_wake(long long, const Inbox&) override {
                Action a;
                Message m;
                m.push(1, 4);
                a.sends.push_back({kBroadcastPort, m});
                a.sends.push_back({kBroadcastPort, m});
                a.halt = true;
                return a;
            }
        };
        return std::make_unique<Bad>();
    };
    CHECK_THROWS_AS(run(p2, f, ModelSpec::radio()), MultiSendInRadio);
}

TEST_CASE("congest bandwidth is enforced exactly") {
    Graph p2 = gen_path(2);
    auto sender = [&](int bits) {
        ProgramFactory f = [bits](const VertexContext& ctx) -> std::unique_ptr<VertexProc> {
            struct S : VertexProc {
                int bits;
                explicit S(int b) : bits(b) {}
                Action on_wake(long long, const Inbox&) override {
                    Action a;
                    Message m;
                    int left = bits;
                    while (left > 0) {
                        m.push(0, std::min(left, 32));
                        left -= 32;
                    }
                    a.sends.push_back({0, m});
                    a.halt = true;
                    return a;
                }
            };
            (void)ctx;
            return std::make_unique<S>(bits);
        };
        return run(p2, f, ModelSpec::congest());
    };
    // n = 2: default budget 8*ceil(log2 2) = 8 bits
    CHECK_NOTHROW(sender(8));
    CHECK_THROWS_AS(sender(9), BandwidthExceeded);
}

TEST_CASE("message encoder audits field widths") {
    Message m;
    CHECK_THROWS_AS(m.push(4, 2), Error); // 4 needs 3 bits
    m.push(3, 2);
    m.push(0, 1);
    CHECK(m.bits == 3);
}

TEST_CASE("flooding for t rounds collects exactly the ball") {
    struct Flood : VertexProc {
        int id, t;
        std::set<uint64_t> seen;
        Flood(int id, int t) : id(id), t(t) { seen.insert((uint64_t)id); }
        Action on_wake(long long round, const Inbox& inbox) override {
            for (const auto& [port, msg] : inbox.items)
                for (uint64_t f : msg.fields) seen.insert(f);
            Action a;
            if (round < t) {
                Message m;
                for (uint64_t s : seen) m.push(s, 64);
                for (int p = 0; p < degree; p++) a.sends.push_back({p, m});
                a.next_wake = round + 1;
            } else {
                a.output = std::vector<uint64_t>(seen.begin(), seen.end());
                a.halt = true;
            }
            return a;
        }
        int degree = 0;
    };
    for (const Graph& g : {gen_cycle(30), gen_grid({5, 5}, false), gen_comb(3, 6)}) {
        for (int t : {1, 2, 4}) {
            ProgramFactory f = [&](const VertexContext& ctx) -> std::unique_ptr<VertexProc> {
                auto p = std::make_unique<Flood>(ctx.id, t);
                p->degree = ctx.degree;
                return p;
            };
            SimRun r = run(g, f, ModelSpec::local());
            for (int v = 0; v < g.n; v++) {
                auto b = ball(g, v, t);
                std::vector<uint64_t> expect(b.begin(), b.end());
                CHECK(*r.outputs[v] == expect);
                CHECK(r.energy[v] == t + 1);
            }
        }
    }
}

TEST_CASE("messages to sleeping vertices are lost") {
    Graph p2 = gen_path(2);
    ProgramFactory f = [&](const VertexContext& ctx) -> std::unique_ptr<VertexProc> {
        struct Sender : VertexProc {
            Action on_wake(long long, const Inbox&) override {
                Action a;
                Message m;
                m.push(7, 8);
                a.sends.push_back({0, m});
                a.output = std::vector<uint64_t>{};
                a.halt = true;
                return a;
            }
        };
        struct LateListener : VertexProc {
            long long first_wake() override { return 1; }
            Action on_wake(long long, const Inbox& inbox) override {
                Action a;
                std::vector<uint64_t> got;
                for (const auto& [port, msg] : inbox.items) got.push_back(msg.get(0));
                a.output = got;
                a.halt = true;
                return a;
            }
        };
        if (ctx.id == 0) return std::make_unique<Sender>();
        return std::make_unique<LateListener>();
    };
    SimRun r = run(p2, f, ModelSpec::local());
    CHECK(*r.outputs[1] == std::vector<uint64_t>{}); // round-0 message lost
    CHECK(r.energy[1] == 1);
}

TEST_CASE("energy accounting and determinism") {
    Graph g = gen_cycle(8);
    auto make = [&]() {
        ProgramFactory f = [](const VertexContext&) -> std::unique_ptr<VertexProc> {
            struct P : VertexProc {
                Action on_wake(long long round, const Inbox&) override {
                    Action a;
                    if (round < 4) a.next_wake = round + 2; // awake rounds 0,2,4
                    else { a.output = std::vector<uint64_t>{(uint64_t)round}; a.halt = true; }
                    return a;
                }
            };
            return std::make_unique<P>();
        };
        return f;
    };
    SimRun a = run(g, make(), ModelSpec::local(), {}, 5);
    SimRun b = run(g, make(), ModelSpec::local(), {}, 5);
    CHECK(a.outputs == b.outputs);
    CHECK(a.energy == b.energy);
    CHECK(a.rounds_used == b.rounds_used);
    for (int v = 0; v < g.n; v++) CHECK(a.energy[v] == 3);
    CHECK(a.energy_complexity == 3);
    std::string report = energy_report(a);
    CHECK(report.find("max 3") != std::string::npos);
}

TEST_CASE("per-vertex seeds derive from the global seed") {
    Graph g = gen_path(3);
    std::vector<uint64_t> seeds;
    ProgramFactory f = [&](const VertexContext& ctx) -> std::unique_ptr<VertexProc> {
        seeds.push_back(ctx.seed);
        struct P : VertexProc {
            Action on_wake(long long, const Inbox&) override {
                Action a;
                a.halt = true;
                return a;
            }
        };
        return std::make_unique<P>();
    };
    run(g, f, ModelSpec::local(), {}, 123);
    CHECK(seeds.size() == 3);
    CHECK(seeds[0] != seeds[1]);
    CHECK(seeds[1] != seeds[2]);
}
