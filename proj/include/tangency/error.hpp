#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tangency {

enum class ErrorCode {
  Reject,             // malformed composition entries
  Index,              // position out of range
  Parity,             // odd norm where an even one is required
  Degree,             // norm exceeds the ambient degree
  Domain,             // input outside Omega-bullet or similar domain
  Order,              // pair is not comparable
  Apex,               // the cone apex has no cell in a sphere ambient
  Negative,           // negative size parameter
  Empty,              // empty base composition
  InvalidMarker,      // marker not in Upsilon(omega)
  Ambiguous,          // marker transport depends on the decomposition
  ZeroPoly,           // identically zero polynomial
  NotSquarefree,
  UnboundedNegative,  // P <= 0 near an infinite end
  Parse,              // text/JSON input could not be read
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tangency
