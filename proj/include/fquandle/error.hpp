#ifndef FQUANDLE_ERROR_HPP_
#define FQUANDLE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fquandle {

enum class ErrorKind {
  InvalidAlphabet,
  InvalidLetter,
  AlphabetMismatch,
  NotInFreeQuandle,
  EmptyGeneratorSet,
  BoundTooSmall,
  ClosureTooLarge,
  NotInClosure,
  WitnessNotFound,
  EmptyInputWord,
  UnknownGenerator,
  MalformedExponent,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  std::string const& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace fquandle

#endif  // FQUANDLE_ERROR_HPP_
