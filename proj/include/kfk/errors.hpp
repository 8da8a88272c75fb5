#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kfk {

// Malformed input files (table cache, user function CSV).
class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A per-element precondition failed; `index` names the offending argument.
class precondition_error : public std::invalid_argument {
 public:
  precondition_error(const std::string& what, std::uint64_t index)
      : std::invalid_argument(what), index_(index) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

}  // namespace kfk
