#pragma once

#include <stdexcept>
#include <string>

namespace labelcut {

// Malformed instance or metadata text; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// File declares a format version this build does not understand.
class VersionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration or search guard was exceeded. `what()` names the guard.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace labelcut
