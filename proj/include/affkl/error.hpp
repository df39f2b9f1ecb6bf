#pragma once

#include <stdexcept>
#include <string>

namespace affkl {

// Machine-readable error codes. The CLI maps these to exit statuses.
enum class ErrorCode {
    unsupported_type,
    invalid_argument,
    datum_mismatch,
    not_a_coroot,
    invalid_weight,
    invalid_pair,
    cap_exceeded,
    internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Thrown when an enumeration or recursion would exceed its configured bound.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& what)
        : Error(ErrorCode::cap_exceeded, what) {}
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    if (code == ErrorCode::cap_exceeded)
        throw CapExceeded(what);
    throw Error(code, what);
}

} // namespace affkl
