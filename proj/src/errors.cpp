#include "hycap/errors.hpp"

namespace hycap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::regime: return "regime";
    case ErrorKind::range: return "range";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::accuracy: return "accuracy";
    case ErrorKind::evaluation: return "evaluation";
    case ErrorKind::bracket: return "bracket";
    case ErrorKind::validation: return "validation";
    case ErrorKind::inconsistent_input: return "inconsistent-input";
    case ErrorKind::data_inconsistency: return "data-inconsistency";
    case ErrorKind::wrong_condenser: return "wrong-condenser";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hycap
