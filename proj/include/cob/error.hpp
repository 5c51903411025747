#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cob {

enum class ErrorKind {
  InvalidExponent,
  InvalidIndex,
  NonSquare,
  UnsupportedAssembly,
  NonCoprime,
  GridTooCoarse,
  InvalidProfile,
  NotAlmostContact,
  ChernParityMismatch,
  MultipleXSummands,
  InvalidRecipe,
  InvalidTarget,
  Parse,
  MatrixTooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and the CLI
/// exit-code table) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cob
