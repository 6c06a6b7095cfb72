#pragma once

#include <stdexcept>
#include <string>

namespace stgr {

// Contract or input violations. The CLI maps these to exit code 2.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an enumeration would exceed the configured leaf budget.
// The CLI maps this to exit code 3.
struct budget_error : error {
  explicit budget_error(const std::string& msg) : error(msg) {}
};

}  // namespace stgr
