#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqss/analysis.hpp"

namespace eqss {

enum class EntryKind { kSimplicial, kProfile, kBetti };
std::string to_string(EntryKind k);

/// A value the report must contain at a JSON pointer.
struct Expectation {
  std::string pointer;
  nlohmann::json value;
};

struct CorpusEntry {
  std::string name;
  EntryKind kind = EntryKind::kSimplicial;
  std::string description;
  /// The input document (complex, profile input or Betti data).
  std::function<nlohmann::json()> input;
  std::vector<Expectation> expectations;
};

const std::vector<CorpusEntry>& corpus();
/// Throws InputError for an unknown name.
const CorpusEntry& corpus_entry(const std::string& name);

/// Analysis report for any input document; the kind is taken from its keys
/// ("simplices", "manifold" with a profile, or Betti lists).
nlohmann::json analyze_document(const nlohmann::json& input, const AnalysisOptions& options = {});
EntryKind document_kind(const nlohmann::json& input);

struct EntryResult {
  std::string name;
  nlohmann::json report;
  std::vector<std::string> mismatches;
  bool ok() const;
};

EntryResult run_entry(const CorpusEntry& entry, const AnalysisOptions& options = {});
/// Runs entries in parallel; results keep the corpus order.
std::vector<EntryResult> run_corpus(const std::vector<const CorpusEntry*>& entries,
                                    const AnalysisOptions& options = {});
nlohmann::json corpus_summary(const std::vector<EntryResult>& results);

}  // namespace eqss
