#include "synthcomp/prompt.hpp"

#include <algorithm>
#include <cctype>
#include <set>
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

struct Piece {
  bool is_marker = false;
  std::string text;  // literal text, or the marker name
};

std::vector<Piece> parse_pieces(const std::string& text) {
  std::vector<Piece> pieces;
  std::string literal;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '<') {
      std::size_t close = text.find_first_of("<>", i + 1);
      if (close == std::string::npos || text[close] == '<') {
        throw std::invalid_argument("template: malformed marker in '" + text + "'");
      }
      std::string name = trim(text.substr(i + 1, close - i - 1));
      if (name.empty()) {
        throw std::invalid_argument("template: empty marker in '" + text + "'");
      }
      if (!literal.empty()) {
        pieces.push_back({false, literal});
        literal.clear();
      }
      pieces.push_back({true, name});
      i = close + 1;
    } else {
      literal.push_back(text[i]);
      ++i;
    }
  }
  if (!literal.empty()) pieces.push_back({false, literal});
  return pieces;
}

// Word and comma tokens; a word is any maximal run of non-space, non-comma
// characters. Captions in this pipeline carry no other punctuation.
std::vector<std::string> word_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) {
        tokens.push_back(current);
        current.clear();
      }
      if (c == ',') tokens.emplace_back(",");
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(current);
  return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& tok : tokens) {
    if (tok == ",") {
      if (out.empty()) continue;  // drop a leading comma
      if (!out.empty() && out.back() == ',') continue;  // collapse ",,"
      out += ",";
    } else {
      if (!out.empty()) out += " ";
      out += tok;
    }
  }
  // A trailing comma is an artifact of deletion; drop it.
  while (!out.empty() && (out.back() == ',' || out.back() == ' ')) out.pop_back();
  return out;
}

// Lowercase alphanumeric tokens for lexical analysis.
std::vector<std::string> alnum_tokens(const std::string& text) {
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

bool is_interest_class(const std::string& surface, const ClassVocabulary& vocab,
                       const Lexicon& lexicon) {
  if (vocab.find_label(surface)) return true;
  for (const auto& cat : vocab.categories()) {
    for (const auto& syn : cat.synonyms) {
      if (syn == surface) return true;
    }
  }
  return lexicon.is_interest_class(surface);
}

const std::set<std::string> kLeadingDanglers = {"a", "an", "the", "and", "with", ","};
const std::set<std::string> kTrailingDanglers = {"and", "with", "in", "on", "at", ","};

}  // namespace

std::vector<std::string> PromptTemplate::markers() const {
  std::vector<std::string> names;
  for (const auto& piece : parse_pieces(text)) {
    if (piece.is_marker) names.push_back(piece.text);
  }
  return names;
}

bool PromptTemplate::has_marker(const std::string& name) const {
  auto names = markers();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Caption fill_template(const PromptTemplate& tmpl,
                      const std::map<std::string, std::string>& slots,
                      std::vector<std::string>* warnings) {
  auto pieces = parse_pieces(tmpl.text);
  bool any_marker =
      std::any_of(pieces.begin(), pieces.end(), [](const Piece& p) { return p.is_marker; });

  Caption caption;
  caption.source = CaptionSource::synthesized;
  if (!any_marker) {
    caption.text = tmpl.text;
    if (warnings) {
      for (const auto& [name, value] : slots) {
        warnings->push_back("unused slot value '" + name + "'");
      }
    }
    return caption;
  }

  std::set<std::string> used;
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& piece = pieces[i];
    if (piece.is_marker) {
      auto it = slots.find(piece.text);
      if (it == slots.end()) {
        throw std::invalid_argument("fill_template: missing slot value for <" +
                                    piece.text + ">");
      }
      used.insert(piece.text);
      parts.push_back(trim(it->second));
    } else {
      std::string literal = piece.text;
      bool marker_before = i > 0 && pieces[i - 1].is_marker;
      bool marker_after = i + 1 < pieces.size() && pieces[i + 1].is_marker;
      if (marker_before) {
        literal.erase(0, literal.find_first_not_of(" \t"));
      }
      if (marker_after) {
        std::size_t e = literal.find_last_not_of(" \t");
        literal = e == std::string::npos ? "" : literal.substr(0, e + 1);
      }
      parts.push_back(literal);
    }
  }
  std::string out;
  for (const auto& part : parts) {
    if (part.empty()) continue;
    if (!out.empty()) out += " ";
    out += part;
  }
  caption.text = out;

  if (warnings) {
    for (const auto& [name, value] : slots) {
      if (!used.count(name)) {
        warnings->push_back("unused slot value '" + name + "'");
      }
    }
  }
  return caption;
}

std::vector<ContextWord> extract_context_words(const Caption& caption,
                                               const ClassVocabulary& vocab,
                                               const Lexicon& lexicon) {
  auto tokens = alnum_tokens(caption.text);
  std::vector<ContextWord> out;
  std::set<std::string> seen;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::string candidate;
    if (i + 1 < tokens.size()) {
      std::string bigram = tokens[i] + " " + tokens[i + 1];
      if (lexicon.noun_set.count(bigram)) {
        candidate = bigram;
        i += 2;
      }
    }
    if (candidate.empty()) {
      if (lexicon.noun_set.count(tokens[i])) {
        candidate = tokens[i];
      }
      ++i;
    }
    if (candidate.empty()) continue;
    if (is_interest_class(candidate, vocab, lexicon)) continue;
    if (seen.insert(candidate).second) {
      out.push_back(ContextWord{candidate, WordOrigin::extracted});
    }
  }
  return out;
}

std::vector<ContextWord> expand_context_words(const std::vector<ContextWord>& words,
                                              const Lexicon& lexicon) {
  std::vector<ContextWord> out;
  std::set<std::string> seen;
  auto push = [&](const std::string& surface, WordOrigin origin) {
    if (surface.empty()) return;
    if (lexicon.is_interest_class(surface)) return;
    if (seen.insert(surface).second) {
      out.push_back(ContextWord{surface, origin});
    }
  };
  for (const auto& word : words) {
    push(word.surface, word.origin);
  }
  for (const auto& word : words) {
    auto it = lexicon.relation_table.find(word.surface);
    if (it == lexicon.relation_table.end()) continue;
    for (const auto& related : it->second) {
      push(lower(trim(related)), WordOrigin::expanded);
    }
  }
  return out;
}

std::vector<Caption> synthesize_context_sentences(
    const std::vector<ContextWord>& words,
    const std::vector<PromptTemplate>& templates) {
  for (const auto& tmpl : templates) {
    if (!tmpl.has_marker("context")) {
      throw std::invalid_argument("context template lacks <context> marker: '" +
                                  tmpl.text + "'");
    }
  }
  std::vector<Caption> captions;
  captions.reserve(words.size() * templates.size());
  for (const auto& word : words) {
    for (std::size_t t = 0; t < templates.size(); ++t) {
      Caption caption = fill_template(templates[t], {{"context", word.surface}});
      caption.source = CaptionSource::synthesized;
      caption.provenance = "template:" + std::to_string(t);
      captions.push_back(std::move(caption));
    }
  }
  return captions;
}

namespace {

// Deletes every case-insensitive occurrence of the target token sequence,
// together with at most one dangling function word or comma on each side.
std::string remove_phrase(const std::string& text, const std::string& target) {
  auto tokens = word_tokens(text);
  auto needle = word_tokens(target);
  if (needle.empty()) return text;

  std::vector<std::string> folded;
  folded.reserve(tokens.size());
  for (const auto& tok : tokens) folded.push_back(lower(tok));
  std::vector<std::string> needle_folded;
  for (const auto& tok : needle) needle_folded.push_back(lower(tok));

  bool changed = false;
  std::size_t i = 0;
  while (tokens.size() >= needle.size() && i + needle.size() <= tokens.size()) {
    bool match = std::equal(needle_folded.begin(), needle_folded.end(),
                            folded.begin() + static_cast<std::ptrdiff_t>(i));
    if (!match) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    std::size_t end = i + needle.size();  // exclusive
    if (begin > 0 && kLeadingDanglers.count(folded[begin - 1])) {
      --begin;
    }
    if (end < tokens.size() && kTrailingDanglers.count(folded[end])) {
      ++end;
    }
    tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(begin),
                 tokens.begin() + static_cast<std::ptrdiff_t>(end));
    folded.erase(folded.begin() + static_cast<std::ptrdiff_t>(begin),
                 folded.begin() + static_cast<std::ptrdiff_t>(end));
    changed = true;
    i = begin;
  }
  if (!changed) return text;
  return join_tokens(tokens);
}

std::string replace_phrase(const std::string& text, const std::string& target,
                           const std::string& replacement) {
  auto tokens = word_tokens(text);
  auto needle = word_tokens(target);
  auto subst = word_tokens(replacement);
  if (needle.empty()) return text;

  std::vector<std::string> folded;
  for (const auto& tok : tokens) folded.push_back(lower(tok));
  std::vector<std::string> needle_folded;
  for (const auto& tok : needle) needle_folded.push_back(lower(tok));

  bool changed = false;
  std::size_t i = 0;
  while (i + needle.size() <= tokens.size()) {
    bool match = std::equal(needle_folded.begin(), needle_folded.end(),
                            folded.begin() + static_cast<std::ptrdiff_t>(i));
    if (!match) {
      ++i;
      continue;
    }
    tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                 tokens.begin() + static_cast<std::ptrdiff_t>(i + needle.size()));
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(i), subst.begin(),
                  subst.end());
    folded.erase(folded.begin() + static_cast<std::ptrdiff_t>(i),
                 folded.begin() + static_cast<std::ptrdiff_t>(i + needle.size()));
    std::vector<std::string> subst_folded;
    for (const auto& tok : subst) subst_folded.push_back(lower(tok));
    folded.insert(folded.begin() + static_cast<std::ptrdiff_t>(i), subst_folded.begin(),
                  subst_folded.end());
    changed = true;
    i += subst.size();
  }
  if (!changed) return text;
  return join_tokens(tokens);
}

}  // namespace

Caption intervene(const Caption& caption, const Intervention& edit) {
  if (trim(edit.target).empty()) {
    throw std::invalid_argument("intervene: empty target");
  }
  if ((edit.kind == InterventionKind::style_change) == trim(edit.replacement).empty()) {
    throw std::invalid_argument(
        "intervene: replacement required iff kind is style_change");
  }

  Caption out = caption;
  out.source = CaptionSource::intervened;
  switch (edit.kind) {
    case InterventionKind::remove:
      out.text = remove_phrase(caption.text, edit.target);
      break;
    case InterventionKind::add:
      if (edit.position == AddPosition::prepend) {
        out.text = trim(edit.target) + ", " + caption.text;
      } else {
        out.text = caption.text + ", " + trim(edit.target);
      }
      break;
    case InterventionKind::style_change:
      out.text = replace_phrase(caption.text, edit.target, edit.replacement);
      break;
  }
  return out;
}

}  // namespace synthcomp
