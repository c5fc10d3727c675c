#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bugraph {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid construction arguments (vertex out of range, self-loop, bad order).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An operation that is only defined on connected graphs received a
/// disconnected one.
class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is disconnected") {}
  explicit DisconnectedGraph(const std::string& what) : Error(what) {}
};

class MalformedGraph6 : public Error {
 public:
  explicit MalformedGraph6(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line number, or 0 when the input was not read from a stream.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotExactlyTwoConnected : public Error {
 public:
  explicit NotExactlyTwoConnected(int connectivity)
      : Error("vertex connectivity is " + std::to_string(connectivity) + ", expected 2"),
        connectivity_(connectivity) {}

  int connectivity() const noexcept { return connectivity_; }

 private:
  int connectivity_;
};

/// A cut, component or two-cut analysis does not match the graph it is
/// applied to.
class InvalidCut : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// A construction failed one of its own postconditions.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace bugraph
