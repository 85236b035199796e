#ifndef RGDUAL_ERRORS_HPP
#define RGDUAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rgdual {

enum class ErrorCode {
  Parse,
  DomainMismatch,
  NotInvolution,
  HasFixedPoint,
  HypermapDetected,
  BadEdgeLabels,
  UnknownEdge,
  NonOrientable,
  TooManyEdges,
  NonOrientableInGenusMode,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rgdual

#endif  // RGDUAL_ERRORS_HPP
