#pragma once

#include "coh1/actions.hpp"

namespace coh1 {

struct ReportItem {
  std::string item_key;
  std::string group_label;
  ActionDescriptor descriptor;
  OrbitData orbit;
  std::string provenance;   // foliation | reductive | canonical-extension | nilpotent
  std::string moduli_note;  // for parametric families
  std::string note;
};

struct DedupEntry {
  std::string merged_key;
  std::string kept_key;
  std::string reason;
};

struct AdvisoryEntry {
  std::string key;
  TriState check_i = TriState::Unknown;
  TriState check_ii = TriState::Unknown;
  std::string note;
};

/// Deduplicated list of the cohomogeneity one actions the bundled catalogs
/// can certify for one space, with a log of the merges performed.
struct ClassificationReport {
  std::string space;
  long long dim = 0;
  std::vector<ReportItem> items;
  std::vector<DedupEntry> dedup_log;
  std::vector<AdvisoryEntry> advisory;  // undetermined candidates, never items
  std::vector<std::string> warnings;
  bool complete = true;

  int group_count() const;
};

struct ClassifyOptions {
  bool dedup = true;  // disable to inspect congruent copies (testing aid)
};

ClassificationReport classify(const Database& db, const SymmetricSpaceRecord& rec,
                              const ClassifyOptions& opts = {});
ClassificationReport classify_rank_one(const Database& db,
                                       const SymmetricSpaceRecord& rec);

// ------------------------------------------------------------- corpora

struct CorpusItem {
  std::string item_key;
  int group = 0;
  long long codim = -1;  // -1 = not asserted
  std::string orbit_name;
  std::string cite;
};

/// Expected classification of one space, shipped with the repository in
/// the same stanza format as the space database.
struct ReferenceCorpus {
  std::string space;
  std::string theorem;
  int groups = 0;
  std::vector<CorpusItem> items;

  static ReferenceCorpus parse(const std::string& text);
};

/// Bundled corpus for a space name, when one ships.
std::optional<ReferenceCorpus> corpus_for(const std::string& space_name);
std::vector<std::string> corpus_spaces();

struct ClassificationDiff {
  std::vector<std::string> missing;     // in the corpus, not in the report
  std::vector<std::string> extra;       // in the report, not in the corpus
  std::vector<std::string> mismatched;  // shared key, conflicting attributes

  bool empty() const {
    return missing.empty() && extra.empty() && mismatched.empty();
  }
};

ClassificationDiff diff_against_reference(const ClassificationReport& report,
                                          const ReferenceCorpus& corpus);

}  // namespace coh1
