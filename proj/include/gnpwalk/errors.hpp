#pragma once

#include <stdexcept>
#include <string>

namespace gnpwalk {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation requires at least one edge (e.g. the stationary distribution).
class EmptyGraphError : public Error {
 public:
  EmptyGraphError() : Error("graph has no edges") {}
};

/// Operation requires every vertex to have degree >= 1.
class IsolatedVertexError : public Error {
 public:
  explicit IsolatedVertexError(int vertex)
      : Error("vertex " + std::to_string(vertex) + " is isolated"), vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

/// Operation requires a connected graph.
class DisconnectedError : public Error {
 public:
  DisconnectedError() : Error("graph is disconnected") {}
};

/// Pairwise operation called with i == j.
class SameVertexError : public Error {
 public:
  SameVertexError() : Error("source and target vertex must differ") {}
};

/// Malformed edge-list text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Vertex id outside [0, n) in an edge list.
class RangeError : public Error {
 public:
  using Error::Error;
};

class DuplicateEdgeError : public Error {
 public:
  using Error::Error;
};

class SelfLoopError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver did not reach the residual tolerance within its iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// First-passage system could not be solved to tolerance. Cannot occur on
/// connected input; indicates a bug upstream.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// Some eigenvalue with index >= 2 equals 1, so sums of 1/(1 - lambda_k)
/// diverge. Happens exactly when the decomposition came from a disconnected
/// graph.
class GapZeroDivergenceError : public Error {
 public:
  GapZeroDivergenceError() : Error("eigenvalue 1 has multiplicity > 1; spectral sums diverge") {}
};

/// Scaled adjacency spectrum requested at p in {0, 1}.
class DegenerateScalingError : public Error {
 public:
  DegenerateScalingError() : Error("scaled spectrum undefined for p in {0, 1}") {}
};

/// Deviation parameter outside the valid range of the edge-count bound.
class CRangeError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check between two algebraic routes failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gnpwalk
