#pragma once

#include <stdexcept>
#include <string>

namespace pod {

// Error categories; mirrored one-to-one by the C API status codes.
enum class ErrorCode {
    Config   = 1,  // invalid or inconsistent configuration
    Io       = 2,  // filesystem / parse failure
    State    = 3,  // missing upstream artifact, wrong stage order
    Numeric  = 4,  // non-finite values, divergence, degenerate inputs
    Argument = 5,  // bad call arguments (shape mismatch etc.)
    Internal = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

[[noreturn]] inline void fail_config(const std::string& msg)   { fail(ErrorCode::Config, msg); }
[[noreturn]] inline void fail_io(const std::string& msg)       { fail(ErrorCode::Io, msg); }
[[noreturn]] inline void fail_state(const std::string& msg)    { fail(ErrorCode::State, msg); }
[[noreturn]] inline void fail_numeric(const std::string& msg)  { fail(ErrorCode::Numeric, msg); }
[[noreturn]] inline void fail_argument(const std::string& msg) { fail(ErrorCode::Argument, msg); }

} // namespace pod
