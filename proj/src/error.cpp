#include "hiergraph/error.hpp"

namespace hiergraph {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MismatchedRank: return "MISMATCHED_RANK";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::FamilyMismatch: return "FAMILY_MISMATCH";
    case ErrorCode::BadParam: return "BAD_PARAM";
    case ErrorCode::WindowNotClosed: return "WINDOW_NOT_CLOSED";
    case ErrorCode::LabelMismatch: return "LABEL_MISMATCH";
    case ErrorCode::UnknownLabel: return "UNKNOWN_LABEL";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::InsufficientWindow: return "INSUFFICIENT_WINDOW";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::Parse: return "PARSE";
  }
  return "UNKNOWN";
}

}  // namespace hiergraph
