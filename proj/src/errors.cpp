#include "satnum/errors.hpp"

namespace satnum {

ResourceError::ResourceError(std::string cap_name, std::size_t limit,
                             std::size_t actual)
    : std::runtime_error(cap_name + " cap exceeded: limit " +
                         std::to_string(limit) + ", instance needs " +
                         std::to_string(actual)),
      cap_name_(std::move(cap_name)),
      limit_(limit),
      actual_(actual) {}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at offset " + std::to_string(position)),
      position_(position) {}

}  // namespace satnum
