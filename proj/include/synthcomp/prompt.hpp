#pragma once

#include <map>
#include <string>
#include <vector>

#include "synthcomp/lexicon.hpp"
#include "synthcomp/vocab.hpp"

namespace synthcomp {

/// Template text with `<name>` slot markers (e.g. `<object>`, `<context>`).
/// Whitespace inside a marker is tolerated and ignored.
struct PromptTemplate {
  std::string text;

  /// Marker names in order of appearance. Throws std::invalid_argument on an
  /// unterminated or nested marker.
  std::vector<std::string> markers() const;
  bool has_marker(const std::string& name) const;
};

enum class CaptionSource { cdi_caption, synthesized, intervened };

struct Caption {
  std::string text;
  CaptionSource source = CaptionSource::synthesized;
  std::string provenance;  // originating CDI id or template id

  bool operator==(const Caption&) const = default;
};

enum class WordOrigin { extracted, expanded };

struct ContextWord {
  std::string surface;  // lowercase, trimmed; may be a bigram
  WordOrigin origin = WordOrigin::extracted;

  bool operator==(const ContextWord&) const = default;
};

enum class InterventionKind { remove, add, style_change };
enum class AddPosition { append, prepend };

struct Intervention {
  InterventionKind kind = InterventionKind::remove;
  std::string target;
  std::string replacement;                     // style_change only
  AddPosition position = AddPosition::append;  // add only
};

/// Replaces every marker with its slot value; the boundaries between
/// substituted values and surrounding text are normalized to single spaces.
/// A template without markers passes through unchanged. Missing slot values
/// throw std::invalid_argument; unused slot values are reported through
/// `warnings` when provided.
Caption fill_template(const PromptTemplate& tmpl,
                      const std::map<std::string, std::string>& slots,
                      std::vector<std::string>* warnings = nullptr);

/// Lowercases and tokenizes the caption, keeps maximal noun n-grams (n <= 2)
/// found in the lexicon's noun set, drops interest-class surfaces, and
/// deduplicates preserving first occurrence.
std::vector<ContextWord> extract_context_words(const Caption& caption,
                                               const ClassVocabulary& vocab,
                                               const Lexicon& lexicon);

/// Appends each input word's related words from the relation table (tagged
/// expanded), re-applies interest-class removal, deduplicates, keeps order.
std::vector<ContextWord> expand_context_words(const std::vector<ContextWord>& words,
                                              const Lexicon& lexicon);

/// Cross product in (word-major, template-minor) order. Every template must
/// contain a `<context>` marker.
std::vector<Caption> synthesize_context_sentences(
    const std::vector<ContextWord>& words,
    const std::vector<PromptTemplate>& templates);

/// Applies a language intervention. Removal deletes every case-insensitive
/// whole-phrase occurrence of the target and cleans up one dangling function
/// word or comma on each side of the deletion; editing an absent target
/// returns the caption unchanged (with source marked intervened).
Caption intervene(const Caption& caption, const Intervention& edit);

}  // namespace synthcomp
