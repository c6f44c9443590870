#pragma once

#include <stdexcept>
#include <string>

namespace bridgeland {

// Precondition errors are caller mistakes (exit code 2); invariant errors
// mean the library itself computed something impossible (exit code 3).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what, bool invariant = false)
      : std::runtime_error(what), kind_(std::move(kind)), invariant_(invariant) {}

  const std::string& kind() const { return kind_; }
  bool invariant() const { return invariant_; }

 private:
  std::string kind_;
  bool invariant_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
  throw Error(kind, what, false);
}

[[noreturn]] inline void broken(const std::string& kind, const std::string& what) {
  throw Error(kind, what, true);
}

}  // namespace bridgeland
