#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>

namespace zz {

/// Vertex identifier: an integer atom, a string atom, or an ordered pair of
/// identifiers. Product vertices (u,i) are pairs, so a vertex of the n-th
/// tower level is a pair nested n-1 deep.
///
/// Canonical order: integers < strings < pairs; integers numerically,
/// strings lexically (bytewise), pairs lexicographically.
class VertexId {
 public:
  VertexId() : value_(std::int64_t{0}) {}

  template <std::integral T>
    requires(!std::same_as<T, bool>)
  VertexId(T value) : value_(static_cast<std::int64_t>(value)) {}  // NOLINT

  VertexId(std::string value) : value_(std::move(value)) {}  // NOLINT
  VertexId(const char* value) : value_(std::string(value)) {}  // NOLINT

  static VertexId pair(VertexId first, VertexId second);

  bool is_integer() const { return value_.index() == 0; }
  bool is_string() const { return value_.index() == 1; }
  bool is_pair() const { return value_.index() == 2; }

  /// Throws std::logic_error when the id is not of the requested kind.
  std::int64_t as_integer() const;
  const std::string& as_string() const;
  const VertexId& first() const;
  const VertexId& second() const;

  /// Pair nesting depth; atoms have depth 0.
  std::size_t depth() const;

  /// Display form: atoms as-is, pairs as "(a,b)".
  std::string to_string() const;

  std::strong_ordering operator<=>(const VertexId& other) const;
  bool operator==(const VertexId& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

 private:
  struct PairData;
  std::variant<std::int64_t, std::string, std::shared_ptr<const PairData>>
      value_;
};

struct VertexId::PairData {
  VertexId first;
  VertexId second;
};

}  // namespace zz
