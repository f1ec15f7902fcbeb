#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adh {

  enum class ErrorKind {
    not_composable,
    not_commuting,
    type_mismatch,
    edge_mismatch,
    invalid_object,
    invalid_morphism,
    unsupported_limit,
    unsupported_colimit,
    not_admissible,
    not_regular,
    not_a_pushout,
    precondition_unmet,
    invalid_square,
    missing_kernel_pair,
    hypothesis_failed,
    closure_overflow,
    parse_error
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace adh
