#pragma once

#include <stdexcept>
#include <string>

namespace pascalgeo {

// Malformed text input: rationals, symbols, partitions, JSON payloads.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// A well-formed request that asks for an undefined geometric object,
// e.g. the join of two equal points or a fiber point at a marked point.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace pascalgeo
