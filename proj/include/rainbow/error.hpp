#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

enum class ErrorKind {
  Parse,         // malformed graph6 / edge list / coloring text
  Coverage,      // coloring does not match the edge set of its graph
  NotConnected,  // operation requires a connected graph
  Precondition,  // construction applied outside its hypotheses
  ResourceLimit, // edge cap or time budget of the exhaustive solver
  Internal,      // a construction failed its own verification
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rainbow
