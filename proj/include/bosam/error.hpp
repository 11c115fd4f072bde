#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bosam {

// Malformed edge-list or ordering input. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Invalid parameters: infeasible model targets, bad render spec, out-of-range rank.
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A well-formed request the input cannot satisfy ("empty graph", "no pairs", ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A randomized generator ran out of retries.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Broken internal invariant (e.g. a Graph with a self-loop).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace bosam
