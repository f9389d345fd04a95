#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Construction-time violations of a type's invariants (empty coordinate,
// element outside [d], d > 64).
class InvalidType : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class MissingElement : public Error {
 public:
  // element is 0-based.
  MissingElement(std::size_t element)
      : Error("element " + std::to_string(element + 1) + " occurs in no coordinate"),
        element_(element) {}
  std::size_t element() const { return element_; }

 private:
  std::size_t element_;
};

class CyclicType : public Error {
 public:
  using Error::Error;
};

class InvalidSubdivision : public Error {
 public:
  using Error::Error;
};

class NotInSystem : public Error {
 public:
  using Error::Error;
};

class NoStrongPath : public Error {
 public:
  using Error::Error;
};

class NotSpanningTree : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

}  // namespace tom
