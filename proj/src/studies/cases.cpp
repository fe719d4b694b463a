#include <chrono>
#include <sstream>

#include "asch/error.hpp"
#include "common.hpp"

namespace asch {

const StageRecord* CaseTranscript::stage(const std::string& name) const {
  for (const auto& s : stages)
    if (s.name == name) return &s;
  return nullptr;
}

const std::vector<CaseInfo>& list_cases() {
  static const std::vector<CaseInfo> cases = {
      {"cube8", "[[3, 3, 1], [2, 0; 3]]", "3-cube reconstructed from one R2-clique embedded in S_1",
       {{"embedding", 1, 1}, {"extension", 4, 4}, {"assembly", 1, 1}}, Verdict::uniqueness, 48, false},
      {"qpg4_12_45_52", "[[12, 4, 4, 24], [6, 0, 3; 0, 1; 2]]", "nonexistence via three GQ(2,1) blocks in S_1",
       {{"A3", 6, 1}, {"extension", 216, 0}}, Verdict::nonexistence, std::nullopt, false},
      {"qpg4_8_45_18", "[[8, 8, 4, 24], [1, 0, 2; 2, 1; 1]]", "nonexistence via 1-factors over a cubic field",
       {{"one-factors[C15]", 85184, 5704},
        {"triangles[C15]", 5704, 3637},
        {"A3[C15]", 3637, 55},
        {"extension[C15]", 8000, 0, 55},
        {"one-factors[C9+C6]", 85184, 4736},
        {"triangles[C9+C6]", 4736, 3028},
        {"A3[C9+C6]", 3028, 45},
        {"extension[C9+C6]", 8000, 0, 45}},
       Verdict::nonexistence, std::nullopt, true},
      {"qpg5_6_45_22", "[[6, 18, 2, 6, 12], [1, 0, 2, 0; 0, 0, 3; 0, 1; 2]]",
       "nonexistence via the cubic bipartite census on 18 vertices",
       {{"census", -1, 18}, {"colourings", 18, 18}, {"A2", 18, 7}, {"A3", 7, 0}}, Verdict::nonexistence,
       std::nullopt, false},
      {"qpg5_12_40_2", "[[12, 2, 1, 12, 12], [6, 0, 4, 1; 0, 0, 1; 0, 1; 4]]",
       "uniqueness via three R2-bicliques and common-neighbour disambiguation",
       {{"A3", 2, 1}, {"extension", 112, 28}, {"compatible pairs", 378, 378}, {"assembly", 1, 1}},
       Verdict::uniqueness, 3840, false},
      {"qpg5_6_45_5", "[[6, 4, 4, 12, 18], [3, 0, 0, 1; 0, 1, 0; 2, 0; 2]]",
       "uniqueness via two 18-cliques of extension vectors",
       {{"A3", 1, 1}, {"extension", 72, 36}, {"cliques", 36, 2}, {"assembly", 2, 2}, {"isomorphism classes", 2, 1}},
       Verdict::uniqueness, 77760, false},
      {"qpg3_12_35_16", "[[12, 6, 16], [4, 3; 3]]", "nonexistence of a spread-like R2-clique structure in S_1",
       {}, Verdict::nonexistence, std::nullopt, false},
      {"qpg3_18_40_12", "[[18, 9, 12], [10, 6; 6]]", "nonexistence of a spread-like R2-clique structure in S_1",
       {}, Verdict::nonexistence, std::nullopt, false},
      {"smith40_unique", "[[8, 4, 3, 24], [2, 0, 2; 0, 1; 1]]", "uniqueness of the 40-vertex scheme via S_4",
       {}, Verdict::uniqueness, 1920, false},
  };
  return cases;
}

const CaseInfo& case_info(const std::string& id) {
  for (const auto& c : list_cases())
    if (c.id == id) return c;
  fail(ErrorKind::usage, "unknown case '" + id + "'");
}

CaseTranscript run_case_unchecked(const std::string& id, const CaseOptions& options) {
  using namespace studies;
  const auto& info = case_info(id);
  auto start = std::chrono::steady_clock::now();
  CaseTranscript t;
  if (id == "cube8") t = run_cube8(options);
  else if (id == "qpg4_12_45_52") t = run_qpg4_12_45_52(options);
  else if (id == "qpg4_8_45_18") t = run_qpg4_8_45_18(options);
  else if (id == "qpg5_6_45_22") t = run_qpg5_6_45_22(options);
  else if (id == "qpg5_12_40_2") t = run_qpg5_12_40_2(options);
  else if (id == "qpg5_6_45_5") t = run_qpg5_6_45_5(options);
  else if (id == "qpg3_12_35_16") t = run_qpg3_12_35_16(options);
  else if (id == "qpg3_18_40_12") t = run_qpg3_18_40_12(options);
  else if (id == "smith40_unique") t = run_smith40_unique(options);
  t.id = id;
  t.array = info.array;
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

std::vector<std::string> compare_with_expected(const CaseTranscript& t, const CaseInfo& info) {
  std::vector<std::string> out;
  auto field = [&](const std::string& stage, const char* what, long want, long got) {
    if (want >= 0 && want != got)
      out.push_back("stage " + stage + ": expected " + what + "=" + std::to_string(want) + ", got " +
                    std::to_string(got));
  };
  for (const auto& e : info.stages) {
    const auto* s = t.stage(e.name);
    if (!s) {
      out.push_back("stage " + e.name + ": missing");
      continue;
    }
    field(e.name, "candidates", e.candidates, s->candidates);
    field(e.name, "surviving", e.surviving, s->surviving);
    field(e.name, "runs", e.runs, s->runs);
  }
  if (t.verdict != info.verdict)
    out.push_back("verdict: expected " + to_string(info.verdict) + ", got " + to_string(t.verdict));
  if (info.automorphisms && (!t.automorphisms || *t.automorphisms != *info.automorphisms))
    out.push_back("automorphisms: expected " + std::to_string(*info.automorphisms) + ", got " +
                  (t.automorphisms ? t.automorphisms->get_str() : std::string("none")));
  return out;
}

CaseTranscript run_case(const std::string& id, const CaseOptions& options) {
  auto t = run_case_unchecked(id, options);
  auto diff = compare_with_expected(t, case_info(id));
  if (!diff.empty()) fail(ErrorKind::case_mismatch, id + ": " + diff.front());
  return t;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::nonexistence: return "nonexistence";
    case Verdict::uniqueness: return "uniqueness";
    case Verdict::example_reconstructed: return "example-reconstructed";
  }
  return "?";
}

void write_transcript_text(std::ostream& out, const CaseTranscript& t) {
  out << "case=" << t.id << " array=" << t.array << '\n';
  for (const auto& s : t.stages) {
    out << "stage=" << s.name << " candidates=" << s.candidates << " surviving=" << s.surviving;
    if (s.runs != 1) out << " runs=" << s.runs;
    out << '\n';
  }
  for (const auto& n : t.notes) out << "note: " << n << '\n';
  out << "verdict=" << to_string(t.verdict);
  if (t.automorphisms) out << " automorphisms=" << t.automorphisms->get_str();
  out << '\n';
}

void write_transcript_machine(std::ostream& out, const CaseTranscript& t) {
  out << "case\t" << t.id << '\t' << t.array << '\n';
  for (const auto& s : t.stages)
    out << "stage\t" << s.name << '\t' << s.candidates << '\t' << s.surviving << '\t' << s.runs << '\n';
  out << "verdict\t" << to_string(t.verdict) << '\t' << (t.automorphisms ? t.automorphisms->get_str() : "") << '\n';
}

std::string default_census_path() { return std::string(ASCH_DATA_DIR) + "/census_qpg5_6_45_22.txt"; }

}  // namespace asch
