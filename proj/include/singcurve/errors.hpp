#pragma once

#include <stdexcept>
#include <string>

namespace singcurve {

// Bad input or violated invariant: non-prime characteristic, budget
// overflow, numerator that cannot come from a curve, ...
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation was refused because its estimated work exceeds the
// configured enumeration bound. Never silently truncated.
class bound_error : public std::runtime_error {
 public:
  explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace singcurve
