#pragma once

#include <stdexcept>
#include <string>

namespace repu {

// All library failures surface as this type; the message is the contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace repu
