#pragma once

#include <stdexcept>
#include <string>

namespace unicyclic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant was requested on a disconnected graph.
class NotConnected : public Error {
 public:
  NotConnected() : Error("not connected") {}
};

/// A vertex label outside 0..n-1, or a malformed edge list.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// Family, formula or range parameters violate a stated constraint. The
/// message names the violated inequality.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 text.
class Graph6Error : public Error {
 public:
  using Error::Error;
};

/// A fractional-coefficient formula produced a non-integer, or a
/// construction produced a graph that contradicts its own post-condition.
/// Either signals a transcription bug, never a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace unicyclic
