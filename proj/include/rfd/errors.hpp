#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rfd {

/// Malformed or inconsistent user input (instance files, mismatched rings,
/// bad arguments). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A Gröbner computation ran past its configured reduction or pair budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The kernel reached a state that contradicts a proven bound, e.g. an Ext
/// scan exhausted its window although M != IM.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rfd
