#pragma once

#include <stdexcept>
#include <string>

namespace tempo {

// Input text could not be parsed. Lines are counted from 1.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// An exact solver refused an input larger than its configured bound.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tempo
