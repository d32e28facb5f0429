#include "abdarg/errors.hpp"

namespace abdarg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MemberOutsideFramework: return "MemberOutsideFramework";
    case ErrorCode::UnknownArgument: return "UnknownArgument";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::UnknownAbducible: return "UnknownAbducible";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InterpretationOutOfVocabulary: return "InterpretationOutOfVocabulary";
    case ErrorCode::VocabularyTooLarge: return "VocabularyTooLarge";
    case ErrorCode::FrameworkTooLarge: return "FrameworkTooLarge";
    case ErrorCode::TooManyAbducibles: return "TooManyAbducibles";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UndeclaredArgument: return "UndeclaredArgument";
    case ErrorCode::MissingBase: return "MissingBase";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::AbducibleNotInProgram: return "AbducibleNotInProgram";
    case ErrorCode::VariableNotSupported: return "VariableNotSupported";
  }
  return "Error";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message, int line,
                           int column) {
  std::string out = to_string(code);
  out += ": ";
  out += message;
  if (line > 0) {
    out += " (line " + std::to_string(line) + ", column " +
           std::to_string(column) + ")";
  }
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, int line, int column)
    : std::runtime_error(format_message(code, message, line, column)),
      code_(code),
      line_(line),
      column_(column) {}

}  // namespace abdarg
