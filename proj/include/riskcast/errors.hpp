#pragma once

#include <stdexcept>
#include <string>

namespace riskcast {

// Error categories map 1:1 onto CLI exit codes and C API status values:
// usage/config -> 2, data -> 3, numerical failure -> 4.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace riskcast
