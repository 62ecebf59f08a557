#pragma once

#include <stdexcept>
#include <string>

namespace zz {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid graph: loop, multi-edge, dangling endpoint, duplicate id.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A vertex map that is not total, or refers to vertices outside its graphs.
class MapError : public Error {
 public:
  using Error::Error;
};

/// Labeling defined on the wrong darts, into the wrong graph, or mismatched H.
class LabelingError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input violating its stated hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed or non-representable interchange document.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace zz
