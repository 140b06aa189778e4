#pragma once

#include <stdexcept>
#include <string>

namespace ncq {

enum class ErrKind {
  invalid_argument,  // bad parameters, malformed config
  precondition,      // an operation precondition was violated
  numerical,         // NaN/overflow detected, singular linear system
  quadrature,        // oscillatory integral failed to converge
};

class SimError : public std::runtime_error {
 public:
  SimError(ErrKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrKind kind() const noexcept { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
  throw SimError(kind, msg);
}

}  // namespace ncq
