#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gapcert {

// Base class for every error this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Graph construction. Vertex ids in messages are 1-based.
class SelfLoopError : public Error {
public:
    explicit SelfLoopError(int u)
        : Error("self-loop at vertex " + std::to_string(u)), vertex(u) {}
    int vertex;
};

class DuplicateEdgeError : public Error {
public:
    DuplicateEdgeError(int u, int v)
        : Error("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")"),
          u(u), v(v) {}
    int u, v;
};

class VertexOutOfRangeError : public Error {
public:
    VertexOutOfRangeError(int u, int n)
        : Error("vertex " + std::to_string(u) + " out of range [1, " + std::to_string(n) + "]"),
          vertex(u) {}
    int vertex;
};

// Preconditions of spectral / walk / bound operations.
class DisconnectedError : public Error {
public:
    DisconnectedError() : Error("graph is disconnected") {}
};

class NoConvergenceError : public Error {
public:
    NoConvergenceError(int iterations, double last_residual)
        : Error("no convergence after " + std::to_string(iterations) +
                " iterations (last residual " + std::to_string(last_residual) + ")"),
          iterations(iterations), last_residual(last_residual) {}
    int iterations;
    double last_residual;
};

class TooLargeForDenseOracleError : public Error {
public:
    TooLargeForDenseOracleError(int n, int cap)
        : Error("graph order " + std::to_string(n) + " exceeds dense solver cap " +
                std::to_string(cap)),
          n(n), cap(cap) {}
    int n, cap;
};

class ZeroVectorError : public Error {
public:
    ZeroVectorError() : Error("test vector has zero norm") {}
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::size_t got, std::size_t want)
        : Error("vector length " + std::to_string(got) + " does not match graph order " +
                std::to_string(want)) {}
};

class IsolatedVertexError : public Error {
public:
    explicit IsolatedVertexError(int u)
        : Error("vertex " + std::to_string(u) + " has no walks of the requested length"),
          vertex(u) {}
    int vertex;
};

class BipartiteInputError : public Error {
public:
    BipartiteInputError() : Error("graph is bipartite; the plain walk-vector limit does not apply") {}
};

class NotBipartiteError : public Error {
public:
    NotBipartiteError() : Error("graph is not bipartite") {}
};

class RegularGraphError : public Error {
public:
    RegularGraphError() : Error("graph is regular; a vertex of degree below the maximum is required") {}
};

class InvalidParamsError : public Error {
public:
    using Error::Error;
};

class GenerationExhaustedError : public Error {
public:
    using Error::Error;
};

// Edge-list file format.
class MalformedLineError : public Error {
public:
    MalformedLineError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

class HeaderMismatchError : public Error {
public:
    explicit HeaderMismatchError(const std::string& what) : Error(what) {}
};

class BadConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gapcert
