#pragma once

#include <stdexcept>
#include <string>

namespace mz {

/// Input could not be parsed (group specs, cycle notation, series files).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(std::string message)
        : std::runtime_error(std::move(message)), position_(0) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A configured resource bound (element cap, tuple cap, index cap, degree
/// limit) would be exceeded.  Deliberately fatal: the caller asked for a
/// computation that is out of desk scale.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mz
