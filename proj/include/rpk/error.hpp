#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rpk {

enum class Errc {
  InvalidDigraph,
  InvalidArgument,
  EmptyVertexSet,
  SameEndpoints,
  InstanceTooLarge,
  NotAcyclic,
  PreconditionFailed,
  TheoremViolation,
  UnknownFixture,
  ParseError,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rpk
