#ifndef CORE_SIMKERNEL_HPP
#define CORE_SIMKERNEL_HPP

#include "core/graph.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace core {

enum class ModelKind { Local, Congest, RadioCongest };

struct ModelSpec {
    ModelKind kind = ModelKind::Local;
    // CONGEST / RADIO-CONGEST message budget; 0 means the default
    // 8*ceil(log2 n), resolved against the graph at run time.
    long long bandwidth_bits = 0;

    static ModelSpec local() { return {ModelKind::Local, 0}; }
    static ModelSpec congest(long long bits = 0) { return {ModelKind::Congest, bits}; }
    static ModelSpec radio(long long bits = 0) { return {ModelKind::RadioCongest, bits}; }
};

// Length-audited message encoder: every field is appended with an explicit
// bit width, so CONGEST limits are enforced on the exact encoded length.
struct Message {
    std::vector<uint64_t> fields;
    std::vector<uint8_t> widths;
    long long bits = 0;

    void push(uint64_t value, int nbits);
    uint64_t get(size_t i) const { return fields[i]; }
    size_t size() const { return fields.size(); }
    bool operator==(const Message& o) const { return fields == o.fields && widths == o.widths; }
};

// Messages that arrived while this vertex was awake, not yet consumed.
struct Inbox {
    // (port the message arrived on, message); port semantics: for LOCAL and
    // CONGEST the local port of the receiving vertex; for RADIO the port of
    // the sole transmitting neighbor. Ordered by (round, port).
    std::vector<std::pair<int, Message>> items;
};

constexpr int kBroadcastPort = -1;

struct Action {
    std::vector<std::pair<int, Message>> sends; // (port, message); RADIO uses kBroadcastPort
    long long next_wake = -1;                   // absolute round; < 0 together with halt=false is an error
    bool halt = false;
    std::optional<std::vector<uint64_t>> output;
};

struct VertexContext {
    int id = 0;
    int degree = 0;
    uint64_t seed = 0; // private seed derived from (global seed, vertex id)
};

// Behavioral interface: the kernel calls on_wake exactly in the rounds the
// vertex scheduled. Messages sent in round t are received (and buffered) by
// neighbors awake in round t and handed over at their next on_wake.
class VertexProc {
public:
    virtual ~VertexProc() = default;
    virtual long long first_wake() { return 0; }
    virtual Action on_wake(long long round, const Inbox& inbox) = 0;
    // Called when the vertex halts in a round where messages arrived after
    // it acted (it was awake, so reception costs no extra energy). May
    // replace the vertex output; no further sends or wakes are possible.
    virtual std::optional<std::vector<uint64_t>> on_halt_inbox(long long round, const Inbox& inbox) {
        (void)round; (void)inbox;
        return std::nullopt;
    }
};

using ProgramFactory = std::function<std::unique_ptr<VertexProc>(const VertexContext&)>;

struct TraceEvent {
    long long round;
    int vertex;
    std::string event; // wake | send | recv | collision | halt
    long long payload_bits;
};

struct SimRun {
    std::vector<std::optional<std::vector<uint64_t>>> outputs;
    long long rounds_used = 0;
    bool timed_out = false;
    std::vector<long long> energy;   // awake rounds per vertex
    long long energy_complexity = 0; // max over vertices
    std::vector<TraceEvent> trace;   // only when tracing enabled
};

struct RunOptions {
    long long max_rounds = 10'000'000;
    bool record_trace = false;
};

SimRun run(const Graph& g, const ProgramFactory& program, const ModelSpec& model,
           const RunOptions& opts = {}, uint64_t seed = 0);

// Per-vertex energy table: "vertex energy" lines plus max and mean.
std::string energy_report(const SimRun& run);

// Trace serialization: "round vertex event payload_bits" lines in stable
// (round, vertex, event) order.
std::string format_trace(const SimRun& run);

} // namespace core

#endif
