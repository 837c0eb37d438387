#pragma once

#include <stdexcept>
#include <string>

namespace tsurf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: unparsable text, malformed JSON, missing files.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsurf
