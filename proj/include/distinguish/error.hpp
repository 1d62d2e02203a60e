#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distinguish {

/// Malformed input: bad permutation arrays, unknown names, degree mismatches.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured cap (element count, vertex count, enumeration size) was hit.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& cap_name, std::size_t cap)
      : std::runtime_error(cap_name + " exceeded (cap " + std::to_string(cap) + ")"),
        cap_name_(cap_name),
        cap_(cap) {}

  const std::string& cap_name() const { return cap_name_; }
  std::size_t cap() const { return cap_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace distinguish
