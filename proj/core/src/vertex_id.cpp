#include "zz/vertex_id.hpp"

#include <stdexcept>

namespace zz {

VertexId VertexId::pair(VertexId first, VertexId second) {
  VertexId id;
  id.value_ = std::make_shared<const PairData>(
      PairData{std::move(first), std::move(second)});
  return id;
}

std::int64_t VertexId::as_integer() const {
  if (!is_integer()) throw std::logic_error("vertex id is not an integer");
  return std::get<0>(value_);
}

const std::string& VertexId::as_string() const {
  if (!is_string()) throw std::logic_error("vertex id is not a string");
  return std::get<1>(value_);
}

const VertexId& VertexId::first() const {
  if (!is_pair()) throw std::logic_error("vertex id is not a pair");
  return std::get<2>(value_)->first;
}

const VertexId& VertexId::second() const {
  if (!is_pair()) throw std::logic_error("vertex id is not a pair");
  return std::get<2>(value_)->second;
}

std::size_t VertexId::depth() const {
  std::size_t d = 0;
  const VertexId* cur = this;
  while (cur->is_pair()) {
    ++d;
    cur = &cur->first();
  }
  return d;
}

std::string VertexId::to_string() const {
  switch (value_.index()) {
    case 0:
      return std::to_string(std::get<0>(value_));
    case 1:
      return std::get<1>(value_);
    default: {
      const auto& p = *std::get<2>(value_);
      return "(" + p.first.to_string() + "," + p.second.to_string() + ")";
    }
  }
}

std::strong_ordering VertexId::operator<=>(const VertexId& other) const {
  if (value_.index() != other.value_.index())
    return value_.index() <=> other.value_.index();
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_) <=> std::get<0>(other.value_);
    case 1: {
      int c = std::get<1>(value_).compare(std::get<1>(other.value_));
      return c <=> 0;
    }
    default: {
      const auto& a = std::get<2>(value_);
      const auto& b = std::get<2>(other.value_);
      if (a == b) return std::strong_ordering::equal;
      if (auto c = a->first <=> b->first; c != 0) return c;
      return a->second <=> b->second;
    }
  }
}

}  // namespace zz
