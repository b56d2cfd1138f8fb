#pragma once

#include <stdexcept>
#include <string>

namespace transemi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live on carriers of different size.
class CarrierMismatch : public Error {
 public:
  CarrierMismatch() : Error("carrier mismatch") {}
};

// Malformed user input (instance files, pair lists, tables).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace transemi
