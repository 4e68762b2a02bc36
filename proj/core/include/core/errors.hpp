#ifndef CORE_ERRORS_HPP
#define CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace core {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DisconnectedGraph : Error {
    explicit DisconnectedGraph(const std::string& msg = "graph is not connected") : Error(msg) {}
};
struct CouldNotConnect : Error {
    explicit CouldNotConnect(const std::string& msg = "could not generate a connected graph within the retry budget") : Error(msg) {}
};
struct GenerationFailure : Error {
    explicit GenerationFailure(const std::string& msg = "graph generation failed within the retry budget") : Error(msg) {}
};
struct MissingCoordinates : Error {
    explicit MissingCoordinates(const std::string& msg = "operation requires vertex coordinates") : Error(msg) {}
};
struct EmptyCenterSet : Error {
    explicit EmptyCenterSet(const std::string& msg = "center set must be nonempty") : Error(msg) {}
};
struct NotACycle : Error {
    explicit NotACycle(const std::string& msg = "operation is defined only for cycle graphs") : Error(msg) {}
};
struct BandwidthExceeded : Error {
    explicit BandwidthExceeded(const std::string& msg) : Error(msg) {}
};
struct MultiSendInRadio : Error {
    explicit MultiSendInRadio(const std::string& msg = "a radio vertex may broadcast at most one message per round") : Error(msg) {}
};
struct InconsistentTreeView : Error {
    explicit InconsistentTreeView(const std::string& msg) : Error(msg) {}
};
struct InsufficientView : Error {
    explicit InsufficientView(const std::string& msg) : Error(msg) {}
};
struct RulingViolation : Error {
    explicit RulingViolation(const std::string& msg) : Error(msg) {}
};
struct InstanceTooLarge : Error {
    explicit InstanceTooLarge(const std::string& msg) : Error(msg) {}
};
struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(msg) {}
};
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

} // namespace core

#endif
