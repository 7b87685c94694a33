#pragma once

#include <stdexcept>

namespace chronovec {

// Error taxonomy; the CLI maps each type to a fixed exit code (see tools/).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments or an invalid spec/config (exit 2).
struct ConfigError : Error {
    using Error::Error;
};

// Filesystem or stream failure (exit 3).
struct IoError : Error {
    using Error::Error;
};

// Malformed corpus or data file (exit 4 in strict mode).
struct ParseError : Error {
    using Error::Error;
};

// Training aborted (exit 5); a partial manifest is still persisted.
struct TrainError : Error {
    using Error::Error;
};

// Requested analysis year has no snapshot (exit 6).
struct SnapshotMissingError : Error {
    using Error::Error;
};

} // namespace chronovec
