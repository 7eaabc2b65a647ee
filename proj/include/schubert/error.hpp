#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed partition or frame text, or a non-decreasing sequence.
class ParseError : public Error {
 public:
  using Error::Error;
};

class FrameError : public Error {
 public:
  using Error::Error;
};

class FrameMismatchError : public Error {
 public:
  using Error::Error;
};

class NotEvenError : public Error {
 public:
  using Error::Error;
};

class NotDoubledError : public Error {
 public:
  using Error::Error;
};

/// Raised when an even diagram does not decompose in exactly one way.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class TagError : public Error {
 public:
  using Error::Error;
};

class TwistError : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class AreaError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A broken internal invariant. Never the result of valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace schubert
