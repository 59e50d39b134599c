#ifndef HOINFO_ERROR_HPP
#define HOINFO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hoinfo {

enum class ErrorCode {
  NotNormalized,
  StateOutOfRange,
  NegativeMass,
  TableTooLarge,
  EmptySubset,
  IndexOutOfRange,
  InvalidSubset,
  OverlappingSubsets,
  SystemTooSmall,
  EmptyInput,
  RaggedRows,
  FunctionalNegative,
  FunctionalNonMonotone,
  InvalidOrder,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hoinfo

#endif  // HOINFO_ERROR_HPP
