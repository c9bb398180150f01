#pragma once

#include <stdexcept>
#include <string>

namespace pcbd {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested design class does not admit the given parameters.  The message
// names the violated condition.
struct validation_error : error {
  explicit validation_error(const std::string& msg) : error(msg) {}
};

// No generator is available for a requested Hadamard order.
struct unsupported_order_error : error {
  explicit unsupported_order_error(const std::string& msg) : error(msg) {}
};

// Duplicate or out-of-range index in a selection.
struct index_error : error {
  explicit index_error(const std::string& msg) : error(msg) {}
};

// A coded value cannot be mapped back to a unique level pair.
struct ambiguity_error : error {
  explicit ambiguity_error(const std::string& msg) : error(msg) {}
};

// Block structure mismatch (e.g. a regrouping that would split a block).
struct layout_error : error {
  explicit layout_error(const std::string& msg) : error(msg) {}
};

// An exhaustive search would exceed the configured candidate budget.
struct budget_error : error {
  explicit budget_error(const std::string& msg) : error(msg) {}
};

// A matrix required to be invertible is singular.
struct singular_error : error {
  explicit singular_error(const std::string& msg) : error(msg) {}
};

// Exact arithmetic left the representable range.
struct overflow_error : error {
  explicit overflow_error(const std::string& msg) : error(msg) {}
};

struct io_error : error {
  explicit io_error(const std::string& msg) : error(msg) {}
};

}  // namespace pcbd
