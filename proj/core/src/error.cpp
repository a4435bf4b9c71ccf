#include "qhall/error.hpp"

namespace qhall {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotSymmetrizable: return "NotSymmetrizable";
    case Errc::ProductNotValued: return "ProductNotValued";
    case Errc::DivisibilityViolation: return "DivisibilityViolation";
    case Errc::UnsupportedValuation: return "UnsupportedValuation";
    case Errc::FieldTableMiss: return "FieldTableMiss";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::NegativeExt: return "NegativeExt";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::UnboundGenerator: return "UnboundGenerator";
    case Errc::RelationViolated: return "RelationViolated";
    case Errc::UnsupportedShape: return "UnsupportedShape";
    case Errc::IdentityViolation: return "IdentityViolation";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace qhall
