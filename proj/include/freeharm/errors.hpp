#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freeharm {

/// Malformed textual input. Carries the byte offset of the offending
/// character in the parsed text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A computation would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A frequency grid cannot certify the accuracy requested of it.
class GridResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace freeharm
