#pragma once

#include <stdexcept>
#include <string>

namespace gridsat {

// Input text could not be parsed (bad token, bad structure).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A single constraint would emit more clauses than the configured guard allows.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A decoded assignment contradicts guarantees of the encoding itself.
class EncodingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An external solver process misbehaved: unexpected exit, unparseable output,
// or a model that fails verification.
class ExternalSolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gridsat
