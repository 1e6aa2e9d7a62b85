#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgecolor {

// Malformed edge-list input. line() is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A graph that violates simplicity (self-loop, duplicate edge, id out of range).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation called outside its documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Unknown validator kind, unknown primitive, bad CLI combination.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Augmentation enumeration would exceed its configured length or candidate cap.
class BlowUpGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact oracle asked to solve a component above its node cap.
class OracleCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Infeasible generator spec or exhausted retry budget.
class GeneratorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal guarantee failed; indicates a bug rather than bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace edgecolor
