#pragma once

#include <stdexcept>

namespace toksoft {

// One exception type per failure mode; all derive from std::runtime_error so
// callers can catch coarsely at the CLI boundary.
struct UnknownSymbol : std::runtime_error { using std::runtime_error::runtime_error; };
struct ActionTooLong : std::runtime_error { using std::runtime_error::runtime_error; };
struct InvalidAction : std::runtime_error { using std::runtime_error::runtime_error; };
struct SpaceTooLarge : std::runtime_error { using std::runtime_error::runtime_error; };
struct SupportViolation : std::runtime_error { using std::runtime_error::runtime_error; };
struct IndexOutOfRange : std::runtime_error { using std::runtime_error::runtime_error; };
struct EmptyBatch : std::runtime_error { using std::runtime_error::runtime_error; };
struct ConfigError : std::runtime_error { using std::runtime_error::runtime_error; };
struct NonConvergence : std::runtime_error { using std::runtime_error::runtime_error; };
struct IoError : std::runtime_error { using std::runtime_error::runtime_error; };

}  // namespace toksoft
