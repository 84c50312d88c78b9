#include "synthcomp/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace synthcomp {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> read_lines(const std::filesystem::path& path, bool required) {
  std::ifstream in(path);
  if (!in) {
    if (required) {
      throw std::runtime_error("lexicon: cannot open " + path.string());
    }
    return {};
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (!trim(line).empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = lower(trim(item));
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

bool Lexicon::is_interest_class(const std::string& surface) const {
  auto it = class_synonym_map.find(surface);
  if (it != class_synonym_map.end()) return true;
  for (const auto& [label, synonyms] : class_synonym_map) {
    if (synonyms.count(surface)) return true;
  }
  return false;
}

void Lexicon::merge_vocabulary(const ClassVocabulary& vocab) {
  for (const auto& cat : vocab.categories()) {
    auto& synonyms = class_synonym_map[cat.label];
    for (const auto& syn : cat.synonyms) {
      synonyms.insert(syn);
    }
  }
}

Lexicon load_lexicon(const std::filesystem::path& dir) {
  Lexicon lex;
  for (const auto& line : read_lines(dir / "nouns.txt", /*required=*/true)) {
    std::string noun = lower(trim(line));
    if (!noun.empty()) lex.noun_set.insert(noun);
  }
  for (const auto& line : read_lines(dir / "class_synonyms.tsv", /*required=*/false)) {
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::string label = lower(trim(line.substr(0, tab)));
    if (label.empty()) continue;
    auto& synonyms = lex.class_synonym_map[label];
    for (const auto& syn : split_commas(line.substr(tab + 1))) {
      synonyms.insert(syn);
    }
  }
  for (const auto& line : read_lines(dir / "relations.tsv", /*required=*/false)) {
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::string word = lower(trim(line.substr(0, tab)));
    auto related = split_commas(line.substr(tab + 1));
    if (word.empty() || related.empty()) continue;  // table values must be nonempty
    lex.relation_table[word] = std::move(related);
  }
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& dir, const ClassVocabulary& vocab) {
  Lexicon lex = load_lexicon(dir);
  lex.merge_vocabulary(vocab);
  return lex;
}

}  // namespace synthcomp
