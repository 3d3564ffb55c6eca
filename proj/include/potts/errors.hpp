#pragma once

#include <stdexcept>
#include <string>

namespace potts {

enum class ErrorKind {
    InvalidParameter,
    NotFound,
    InvalidArgument,
    ResourceLimit,
    ExactDivisionFailure,
    NotPolynomialCount,
    Parse,
};

const char* to_string(ErrorKind k);

class PottsError : public std::runtime_error {
public:
    PottsError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw PottsError(kind, what);
}

}  // namespace potts
