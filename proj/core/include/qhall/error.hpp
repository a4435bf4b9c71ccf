#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhall {

enum class Errc {
  InvalidInput,
  NotSymmetrizable,
  ProductNotValued,
  DivisibilityViolation,
  UnsupportedValuation,
  FieldTableMiss,
  CapExceeded,
  DimMismatch,
  NegativeExt,
  UnknownClass,
  UnboundGenerator,
  RelationViolated,
  UnsupportedShape,
  IdentityViolation,
  Internal,
};

std::string_view to_string(Errc code) noexcept;

/// Single exception type for the library; the code says which contract broke.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qhall
