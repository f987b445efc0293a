#pragma once

#include <stdexcept>
#include <string>

namespace bicis {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (bad token, wrong column count). Message names the line.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input violating a domain constraint (id 0, negative weight,
// m > n_u * n_v, self-loop, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// API misuse: precondition broken by the caller (removing an inactive vertex,
// influence of an empty layer).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a hard size guard (oracle enumeration past its limit).
class LimitError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bicis
