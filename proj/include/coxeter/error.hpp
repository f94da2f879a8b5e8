#pragma once

#include <stdexcept>
#include <string>

namespace coxeter {

// Every library failure derives from Error so callers (the CLI in particular)
// can map categories onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad spec parameters, i == j, out-of-range interval index,
// invalid permutation or inversion table.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The vector is not a label of the arrangement under consideration.
class NotALabel : public Error {
 public:
  using Error::Error;
};

// A point lies on one of the hyperplanes.
class OnBoundary : public Error {
 public:
  using Error::Error;
};

// The S_n action is only defined on arrangements with k == l.
class UnsupportedAction : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A consistency check that should be unreachable failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace coxeter
