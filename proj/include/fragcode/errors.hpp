#pragma once
#include <stdexcept>
#include <string>

namespace fragcode {

// Parameter sets that violate a derivation constraint. CLI maps this to exit code 2.
struct ParamError : std::runtime_error {
    explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or inconsistent file contents. CLI maps this to exit code 4.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Fragments that cannot be decoded. CLI maps this to exit code 3.
struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fragcode
