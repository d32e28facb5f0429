#pragma once

#include <stdexcept>
#include <string>

namespace abdarg {

// Reasons an operation can refuse its input.  Codes are stable so the CLI and
// the tests can match on them instead of on message text.
enum class ErrorCode {
  MemberOutsideFramework,         // set operation given arguments outside the framework
  UnknownArgument,                // acceptance/support query names a missing argument
  UnknownAtom,                    // consequence query names an atom outside the program
  UnknownAbducible,               // abductive-framework lookup names no member
  IndexOutOfRange,                // dialogue state index past the end of the move list
  InterpretationOutOfVocabulary,  // interpretation mentions atoms the program lacks
  VocabularyTooLarge,             // model enumeration refused: too many atoms
  FrameworkTooLarge,              // extension enumeration refused: too many arguments
  TooManyAbducibles,              // hypothesis enumeration refused: abducible set too big
  SyntaxError,                    // malformed input text
  UndeclaredArgument,             // attack endpoint never declared
  MissingBase,                    // no usable base framework
  DuplicateName,                  // two blocks claim the same name
  AbducibleNotInProgram,          // abducible atom does not occur in the program
  VariableNotSupported,           // rule uses variables; only ground programs are handled
};

const char* to_string(ErrorCode code);

// Single exception type for every refused input.  line/column are 1-based and
// only meaningful for parse errors; both are 0 elsewhere.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0, int column = 0);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorCode code_;
  int line_;
  int column_;
};

}  // namespace abdarg
