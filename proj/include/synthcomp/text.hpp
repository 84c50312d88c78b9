#pragma once

#include <string>
#include <vector>

namespace synthcomp {

std::string trim_copy(const std::string& s);
std::string lower_copy(std::string s);

/// Lowercase maximal alphanumeric runs.
std::vector<std::string> tokenize_alnum(const std::string& text);

/// tokenize_alnum with function words removed; the token set used by the
/// stub embedder and related oracles.
std::vector<std::string> content_tokens(const std::string& text);

bool is_stopword(const std::string& token);

}  // namespace synthcomp
