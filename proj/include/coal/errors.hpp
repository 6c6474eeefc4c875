#ifndef COAL_ERRORS_HPP
#define COAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coal {

/// Malformed or contract-violating input (bad file, invalid certificate,
/// out-of-range parameter).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A solver exhausted its configured search budget. Raised instead of
/// returning an unproven answer.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coal

#endif  // COAL_ERRORS_HPP
