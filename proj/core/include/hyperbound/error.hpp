#pragma once

#include <stdexcept>
#include <string>

namespace hyperbound {

// Malformed input: unparsable values, wrong shapes, out-of-domain arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that fails an operation's precondition (bad reduction,
// undeclared hypotheses, field too large to enumerate, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperbound
