#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace octo {

enum class ErrorKind {
  invalid_input,
  singular_payoff_matrix,
  non_generic,
  unrealizable_position,
  hypotheses_not_met,
  ambiguous_skeleton,
  step_underflow,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<std::string> witnesses = {})
      : std::runtime_error(what), kind_(kind), witnesses_(std::move(witnesses)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<std::string>& witnesses() const { return witnesses_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witnesses_;
};

}  // namespace octo
