#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "synthcomp/vocab.hpp"

namespace synthcomp {

/// Offline lexical resources: a noun list for context-word detection, a
/// per-class synonym snapshot for interest-class removal, and a related-word
/// table for context expansion. All surfaces are lowercase and trimmed.
struct Lexicon {
  std::set<std::string> noun_set;
  std::map<std::string, std::set<std::string>> class_synonym_map;
  std::map<std::string, std::vector<std::string>> relation_table;

  /// True when `surface` names an interest class: a map key (class label) or
  /// any synonym surface form.
  bool is_interest_class(const std::string& surface) const;

  /// Folds vocabulary labels and synonyms into class_synonym_map so removal
  /// covers classes missing from the snapshot file.
  void merge_vocabulary(const ClassVocabulary& vocab);
};

/// Loads nouns.txt (one noun or noun bigram per line), class_synonyms.tsv
/// ("label<TAB>syn1,syn2,...") and relations.tsv ("word<TAB>rel1,rel2,...")
/// from `dir`. Missing relation/synonym files yield empty tables; a missing
/// noun file is an error. '#' starts a comment in all three.
Lexicon load_lexicon(const std::filesystem::path& dir);
Lexicon load_lexicon(const std::filesystem::path& dir, const ClassVocabulary& vocab);

}  // namespace synthcomp
