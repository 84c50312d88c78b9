#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace synthcomp {

struct Category {
  int id = 0;  // unique, contiguous from 1
  std::string label;
  std::vector<std::string> synonyms;
};

class ClassVocabulary {
 public:
  ClassVocabulary() = default;

  /// Labels in order; ids assigned 1..n. Throws on empty or duplicate labels.
  static ClassVocabulary from_labels(const std::vector<std::string>& labels);

  void add(const std::string& label, std::vector<std::string> synonyms = {});

  const std::vector<Category>& categories() const { return categories_; }
  std::size_t size() const { return categories_.size(); }

  const Category& by_id(int id) const;
  const Category* find_label(const std::string& label) const;

  /// Canonical text form used in digests: "id\tlabel\tsyn1,syn2\n" per row.
  std::string canonical_text() const;

 private:
  std::vector<Category> categories_;
};

/// One category per line: "label" or "label<TAB>syn1,syn2,...".
/// '#' starts a comment. Ids are assigned in file order starting at 1.
ClassVocabulary load_vocabulary(const std::filesystem::path& path);

}  // namespace synthcomp
