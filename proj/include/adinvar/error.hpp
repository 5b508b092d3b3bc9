#pragma once

#include <stdexcept>
#include <string>

namespace adinvar {

enum class ErrorKind {
    dimension_mismatch,
    degenerate_form,
    invalid_input,
    invalid_representation,
    not_naturally_reductive,
    degenerate_plane,
    precondition,
    parse,
    internal,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; the kind lets callers branch
/// (the CLI maps parse/invalid_input to exit code 2).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace adinvar
