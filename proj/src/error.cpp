#include "cob/error.hpp"

namespace cob {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::UnsupportedAssembly: return "UnsupportedAssembly";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::NotAlmostContact: return "NotAlmostContact";
    case ErrorKind::ChernParityMismatch: return "ChernParityMismatch";
    case ErrorKind::MultipleXSummands: return "MultipleXSummands";
    case ErrorKind::InvalidRecipe: return "InvalidRecipe";
    case ErrorKind::InvalidTarget: return "InvalidTarget";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::MatrixTooLarge: return "MatrixTooLarge";
  }
  return "Unknown";
}

}  // namespace cob
