// Error types shared across the index engine.

#pragma once

#include <stdexcept>
#include <string>

namespace coconut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File-system level failure; message carries file and offset context.
class IoError : public Error {
 public:
  using Error::Error;
};

// A file exists but its header or contents do not parse.
class CorruptFileError : public Error {
 public:
  using Error::Error;
};

// Invalid or mutually inconsistent configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Series length / summary shape / key width mismatch between arguments.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Sorted-input contract violated (bottom-up builders).
class OutOfOrderError : public Error {
 public:
  using Error::Error;
};

// Offset does not land on a record boundary, or past end of file.
class OutOfBoundsError : public Error {
 public:
  using Error::Error;
};

class EmptyIndexError : public Error {
 public:
  using Error::Error;
};

// Window query found no record inside the requested window.
class EmptyWindowError : public Error {
 public:
  using Error::Error;
};

}  // namespace coconut
