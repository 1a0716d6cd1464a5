#pragma once

#include <stdexcept>
#include <string>

namespace qnt {

// Domain and shape violations use std::invalid_argument, index violations
// std::out_of_range. NumericalError marks a computation that ran but failed to
// meet its own accuracy contract (non-convergence, identity residual too large).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qnt
