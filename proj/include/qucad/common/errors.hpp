// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qucad {

// File / serialization failures. The CLI maps these to a distinct exit code
// from validation errors (std::invalid_argument).
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qucad
