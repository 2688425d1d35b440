#pragma once

#include <stdexcept>
#include <string>

namespace comptri {

// Status values shared with the C API and the CLI exit codes.
enum class Status : int {
  Ok = 0,
  Usage = 1,   // malformed input, bad flags, mixed fields at the boundary
  Math = 2,    // a mathematical precondition failed (NotComposition, ...)
  Budget = 3,  // a bounded search ran out (NotFound, AlignmentNotFound, Unknown)
};

class Error : public std::runtime_error {
 public:
  Error(Status status, std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg),
        status_(status),
        kind_(std::move(kind)) {}

  Status status() const { return status_; }
  const std::string& kind() const { return kind_; }

  static Error usage(const std::string& msg) {
    return Error(Status::Usage, "Usage", msg);
  }
  static Error math(const std::string& kind, const std::string& msg) {
    return Error(Status::Math, kind, msg);
  }
  static Error budget(const std::string& kind, const std::string& msg) {
    return Error(Status::Budget, kind, msg);
  }

 private:
  Status status_;
  std::string kind_;
};

}  // namespace comptri
