#ifndef OTO_TYPES_HPP
#define OTO_TYPES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oto {

using NodeId = std::uint32_t;

/// 1-based position in an array-backed topological order.
using Rank = std::uint32_t;

struct Edge {
  NodeId u{};
  NodeId v{};

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Error kinds. Everything derives from std::runtime_error or
// std::logic_error so callers can catch broadly.

/// Bad parameters: n = 0, p outside (0,1), M > N, runs = 0, ...
class InvalidConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Edge rejected before any algorithm sees it: self-loop, duplicate,
/// endpoint out of range.
class RejectedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dead order-maintenance handle was used.
class StaleHandle : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A function was called outside its precondition (e.g. cyclic input to
/// comparable_pairs).
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive search refused because the instance is larger than the limit.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an analytic formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An output file could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oto

#endif  // OTO_TYPES_HPP
