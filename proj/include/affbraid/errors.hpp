#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affbraid {

/// Malformed word text. `offset` is the byte offset of the offending token.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// A value does not belong to the group, alphabet or domain an operation expects
/// (rank mismatch, illegal generator, input outside a kernel, illegal move).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computation exceeded an explicit budget (word length, strand count, search depth).
class ResourceError : public std::length_error {
public:
  using std::length_error::length_error;
};

} // namespace affbraid
