#pragma once

#include <stdexcept>
#include <string>

namespace asch {

enum class ErrorKind {
  parse,             // malformed textual input
  usage,             // invalid arguments or unknown identifiers
  infeasible,        // parameters cannot belong to an association scheme
  not_qpg,           // B_1 lacks d+1 distinct eigenvalues
  not_scheme,        // relation matrix violates the scheme axioms
  unsupported,       // outside the implemented range (degree bound, size bound)
  domain,            // e.g. square root of a negative number
  incompatible_class,
  field_mismatch,
  refused,           // input rejected by precondition (size bound, non-commutative)
  case_mismatch,     // a case study count differs from the expectation
  invariant,         // internal consistency check failed (a defect)
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace asch
