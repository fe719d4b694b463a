#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "asch/exact/rational.hpp"
#include "asch/schemes/relation_matrix.hpp"

namespace asch {

struct StageRecord {
  std::string name;
  long candidates = 0;
  long surviving = 0;
  long runs = 1;  // number of times the stage was repeated (once per embedding)
};

enum class Verdict { nonexistence, uniqueness, example_reconstructed };

struct CaseTranscript {
  std::string id;
  std::string array;
  std::vector<StageRecord> stages;
  Verdict verdict = Verdict::nonexistence;
  std::optional<Integer> automorphisms;  // uniqueness cases
  std::vector<std::string> notes;        // free-form lines (embedding dumps, field description)
  std::optional<RelationMatrix> scheme;  // assembled scheme for uniqueness cases
  double seconds = 0;

  const StageRecord* stage(const std::string& name) const;
};

struct ExpectedStage {
  std::string name;
  long candidates = -1;  // -1: not checked
  long surviving = -1;
  long runs = -1;
};

struct CaseInfo {
  std::string id;
  std::string array;
  std::string summary;
  std::vector<ExpectedStage> stages;
  Verdict verdict = Verdict::nonexistence;
  std::optional<long> automorphisms;
  bool slow = false;  // more than a few minutes
};

const std::vector<CaseInfo>& list_cases();
const CaseInfo& case_info(const std::string& id);  // ErrorKind::usage if unknown

struct CaseOptions {
  std::string cache_path;              // census cache; empty means the shipped file
  bool allow_slow_generation = false;  // regenerate the census instead of reading it
  int jobs = 0;                        // 0: hardware concurrency
  std::function<void(const std::string&)> progress;
};

// Runs the case without comparing against the expectations.
CaseTranscript run_case_unchecked(const std::string& id, const CaseOptions& options = {});
// Differences between a transcript and the expectations, one line each.
std::vector<std::string> compare_with_expected(const CaseTranscript& t, const CaseInfo& info);
// Runs and checks; ErrorKind::case_mismatch names the first differing stage.
CaseTranscript run_case(const std::string& id, const CaseOptions& options = {});

std::string to_string(Verdict v);
// Text: "case=..", "stage=NAME candidates=N surviving=M[ runs=R]", "verdict=..".
void write_transcript_text(std::ostream& out, const CaseTranscript& t);
// Machine: tab-separated "stage\tNAME\tN\tM\tR" lines between "case" and "verdict" lines.
void write_transcript_machine(std::ostream& out, const CaseTranscript& t);

std::string default_census_path();

}  // namespace asch
