#ifndef CHORDALKIT_ERRORS_HPP
#define CHORDALKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chordalkit {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoopEdge : GraphError {
    using GraphError::GraphError;
};

struct UnknownVertex : GraphError {
    using GraphError::GraphError;
};

struct NotAPermutation : GraphError {
    using GraphError::GraphError;
};

struct NotAPeo : GraphError {
    using GraphError::GraphError;
};

struct InvalidSequence : GraphError {
    using GraphError::GraphError;
};

struct NotStalled : GraphError {
    using GraphError::GraphError;
};

struct CyclicInput : GraphError {
    using GraphError::GraphError;
};

struct TooLarge : GraphError {
    using GraphError::GraphError;
};

struct BadSize : GraphError {
    using GraphError::GraphError;
};

struct BadProbability : GraphError {
    using GraphError::GraphError;
};

// Input-file errors carry the 1-based line they were detected on.
struct ParseError : GraphError {
    int line;
    ParseError(int line_, const std::string& msg)
        : GraphError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

} // namespace chordalkit

#endif
