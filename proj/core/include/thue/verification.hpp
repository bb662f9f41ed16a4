#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thue/bounds.hpp"
#include "thue/solver.hpp"

namespace thue {

struct CorpusEntry {
  std::string form;
  Int m = 1;
  SolveMode mode = SolveMode::Inequality;
  Int y_max = 100;
  std::optional<long> expected_count;  // pinned only with a provenance note
  std::string notes;
};

std::vector<CorpusEntry> corpus_from_json(const nlohmann::json& j);
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct FormVerification {
  std::string form;
  std::vector<CheckResult> checks;
  bool pass = true;
};

struct CorpusReport {
  std::vector<FormVerification> forms;
  int checks_passed = 0;
  int checks_failed = 0;
  bool pass = true;
};

struct VerifyOptions {
  Rat epsilon = Rat(1, 10);
  double mahler_rel_tol = 1e-12;
  int random_lewis_mahler_pairs = 0;  // extra random pairs per form
  unsigned seed = 0x5eed;
};

// The per-form invariant battery: enumeration sanity, Lewis-Mahler,
// classification, count-vs-bound audit, medium caps, norm floors/ceilings,
// Mahler floor and height sandwich, root-geometry floors.
FormVerification verify_entry(const CorpusEntry& entry, const VerifyOptions& opt);

CorpusReport verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt);

nlohmann::json corpus_report_to_json(const CorpusReport& r);

}  // namespace thue
