#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace magnus {

enum class Errc {
  Parse,
  MissingImage,
  ForeignLetter,
  IndexOverflow,
  // presentation validation
  SharedLetters,
  TooFewY,
  EmptyUV,
  NonPositiveK,
  ReservedName,
  DuplicateGenerator,
  Unsupported,
  // operation preconditions
  ZeroBExponent,
  NonzeroXExponent,
  PreconditionViolated,
  HypothesisViolated,
  TrivialElement,
  // budgets
  IterationCapExceeded,
  ResourceCap,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace magnus
