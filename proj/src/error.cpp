#include "asch/error.hpp"

namespace asch {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::usage: return "usage";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::not_qpg: return "not_qpg";
    case ErrorKind::not_scheme: return "not_scheme";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::domain: return "domain";
    case ErrorKind::incompatible_class: return "incompatible_class";
    case ErrorKind::field_mismatch: return "field_mismatch";
    case ErrorKind::refused: return "refused";
    case ErrorKind::case_mismatch: return "case_mismatch";
    case ErrorKind::invariant: return "invariant";
  }
  return "unknown";
}

}  // namespace asch
