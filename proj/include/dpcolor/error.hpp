#pragma once

#include <stdexcept>
#include <string>

namespace dpc {

// Result classification shared by the C API status codes and the CLI exit
// codes: 0 success, 1 malformed input, 2 hypothesis/verification failure,
// 3 negative mathematical result, 4 resource budget exceeded.
enum class Status {
    Ok = 0,
    InputError = 1,
    HypothesisFailure = 2,
    Negative = 3,
    ResourceLimit = 4,
};

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& message)
        : std::runtime_error(message), status_(status)
    {
    }

    Status status() const { return status_; }

private:
    Status status_;
};

struct InputError : Error {
    explicit InputError(const std::string& message)
        : Error(Status::InputError, message)
    {
    }
};

struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& message)
        : Error(Status::ResourceLimit, message)
    {
    }
};

} // namespace dpc
