#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satnum {

// Invalid graph construction or a structural operation with bad arguments.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A solver or generator refused an instance that exceeds a configured cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string cap_name, std::size_t limit, std::size_t actual);

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::string cap_name_;
  std::size_t limit_;
  std::size_t actual_;
};

// A closed-form formula called outside its parameter domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameters that are in range but not covered by any published row.
class UnsupportedParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed text input. `position` is the 1-based byte position of the
// offending character; end of input is reported as size() + 1.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace satnum
