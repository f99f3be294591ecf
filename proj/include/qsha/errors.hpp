#pragma once

#include <stdexcept>

namespace qsha {

// Error classes with stable CLI exit codes (see tools/qsha_main.cpp).

// Caller broke a documented precondition (bad index, size mismatch, ...).
class contract_violation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured resource cap (dense qubit cap, sweep cap, ...).
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (circuit files, QUBO files, hex strings, profiles).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A gate kind the requested simulation path cannot handle.
class unsupported_gate_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation needs a user-supplied assumption that was not provided.
class assumption_required_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qsha
