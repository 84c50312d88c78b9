#include "synthcomp/text.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace synthcomp {

std::string trim_copy(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower_copy(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> tokenize_alnum(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(current);
  return tokens;
}

bool is_stopword(const std::string& token) {
  static const std::set<std::string> kStopwords = {
      "a", "an", "the", "of", "in", "on", "at", "with", "and",
      "is", "are", "to", "for", "by", "or",
  };
  return kStopwords.count(token) > 0;
}

std::vector<std::string> content_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  for (auto& tok : tokenize_alnum(text)) {
    if (!is_stopword(tok)) tokens.push_back(std::move(tok));
  }
  return tokens;
}

}  // namespace synthcomp
