#include "synthcomp/vocab.hpp"

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

}  // namespace

ClassVocabulary ClassVocabulary::from_labels(const std::vector<std::string>& labels) {
  ClassVocabulary vocab;
  for (const auto& label : labels) {
    vocab.add(label);
  }
  return vocab;
}

void ClassVocabulary::add(const std::string& label, std::vector<std::string> synonyms) {
  std::string norm = lower(trim(label));
  if (norm.empty()) {
    throw std::invalid_argument("vocabulary: empty label");
  }
  if (find_label(norm)) {
    throw std::invalid_argument("vocabulary: duplicate label '" + norm + "'");
  }
  Category cat;
  cat.id = static_cast<int>(categories_.size()) + 1;
  cat.label = norm;
  for (auto& syn : synonyms) {
    std::string s = lower(trim(syn));
    if (!s.empty()) cat.synonyms.push_back(std::move(s));
  }
  categories_.push_back(std::move(cat));
}

const Category& ClassVocabulary::by_id(int id) const {
  if (id < 1 || id > static_cast<int>(categories_.size())) {
    throw std::out_of_range("vocabulary: unknown category id " + std::to_string(id));
  }
  return categories_[id - 1];
}

const Category* ClassVocabulary::find_label(const std::string& label) const {
  std::string norm = lower(trim(label));
  for (const auto& cat : categories_) {
    if (cat.label == norm) return &cat;
  }
  return nullptr;
}

std::string ClassVocabulary::canonical_text() const {
  std::ostringstream out;
  for (const auto& cat : categories_) {
    out << cat.id << '\t' << cat.label << '\t';
    for (std::size_t i = 0; i < cat.synonyms.size(); ++i) {
      if (i) out << ',';
      out << cat.synonyms[i];
    }
    out << '\n';
  }
  return out.str();
}

ClassVocabulary load_vocabulary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("vocabulary: cannot open " + path.string());
  }
  ClassVocabulary vocab;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::string label = line;
    std::vector<std::string> synonyms;
    std::size_t tab = line.find('\t');
    if (tab != std::string::npos) {
      label = line.substr(0, tab);
      std::stringstream rest(line.substr(tab + 1));
      std::string syn;
      while (std::getline(rest, syn, ',')) {
        syn = trim(syn);
        if (!syn.empty()) synonyms.push_back(syn);
      }
    }
    try {
      vocab.add(label, synonyms);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": " + e.what());
    }
  }
  if (vocab.size() == 0) {
    throw std::runtime_error("vocabulary: no categories in " + path.string());
  }
  return vocab;
}

}  // namespace synthcomp
