#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asch/params/imprim.hpp"

namespace asch {

enum class CheckId {
  handshake,
  multiplicities,
  krein,
  absolute_bound,
  quotient_integrality,
  conference,
  triple_intersection,   // not implemented
  forbidden_quadruple,   // not implemented
};

const char* to_string(CheckId id);
CheckId parse_check_id(const std::string& s);  // ErrorKind::usage on unknown ids
// The implemented checks in battery order.
const std::vector<CheckId>& implemented_checks();

struct Reason {
  std::string check;   // check id, or "recovery"
  std::string detail;  // e.g. "q^1_22", "k~1 in A/{0, 2}", "i=1 j=1"
  std::string text;    // rendered reason, e.g. "q^1_22 < 0"
};

enum class CheckStatus { pass, fail, not_implemented };

struct CheckResult {
  CheckStatus status = CheckStatus::pass;
  std::vector<Reason> reasons;  // every failing instance
};

// Precomputed data shared by the spectral checks.
struct SchemeData {
  IntersectionTensor tensor;
  EigenData eigen;
  KreinTensor krein;
  std::vector<ImprimitivityStructure> structures;
};
SchemeData analyse(const IntersectionTensor& t);

CheckResult run_check(const SchemeData& s, CheckId id);

struct FeasibilityReport {
  ParameterArray array;
  bool infeasible = false;
  std::vector<Reason> reasons;
  std::vector<std::string> not_implemented;

  std::string verdict() const { return infeasible ? "infeasible" : "feasible-so-far"; }
  // order \t array \t verdict \t reasons joined by ';'
  std::string machine_line() const;
  std::string text() const;
};

FeasibilityReport run_all(const ParameterArray& a);

}  // namespace asch
