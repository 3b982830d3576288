#include "attnmod/parser.hpp"

#include <algorithm>
#include <cctype>

namespace attnmod {

bool ParserOptions::is_attachment(const std::string& word) const {
  return std::find(attachment_preps.begin(), attachment_preps.end(), word) !=
         attachment_preps.end();
}

namespace {

bool is_word_char(unsigned char c) {
  // Bytes >= 0x80 are UTF-8 continuation/lead bytes; keep them inside words.
  return std::isalnum(c) || c >= 0x80;
}

bool has_alpha(const std::string& word) {
  for (unsigned char c : word) {
    if (std::isalpha(c) || c >= 0x80) return true;
  }
  return false;
}

// Matches (DET|NUM)? ADJ* NOUN+ starting at `i`; returns one past the last
// consumed token, or `i` when there is no match.
int match_chunk(const std::vector<Token>& tokens, int i) {
  const int n = static_cast<int>(tokens.size());
  int j = i;
  if (j < n && (tokens[j].tag == Tag::DET || tokens[j].tag == Tag::NUM)) ++j;
  while (j < n && tokens[j].tag == Tag::ADJ) ++j;
  int k = j;
  while (k < n && tokens[k].tag == Tag::NOUN) ++k;
  return k == j ? i : k;
}

std::string join_text(const std::vector<Token>& tokens, int start, int end) {
  std::string label;
  for (int t = start; t < end; ++t) {
    if (t > start) label += ' ';
    label += tokens[t].text;
  }
  return label;
}

}  // namespace

std::vector<Token> tokenize(const std::string& prompt) {
  std::vector<Token> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(Token{current, static_cast<int>(tokens.size()), Tag::OTHER});
      current.clear();
    }
  };
  for (unsigned char c : prompt) {
    if (is_word_char(c)) {
      current += static_cast<char>(std::tolower(c));
    } else {
      flush();
    }
  }
  flush();
  const bool any_alpha = std::any_of(tokens.begin(), tokens.end(),
                                     [](const Token& t) { return has_alpha(t.text); });
  if (!any_alpha) {
    throw EmptyPrompt("tokenize: no alphabetic token in prompt");
  }
  return tokens;
}

std::vector<Token> tag(std::vector<Token> tokens, const Lexicon& lexicon) {
  for (Token& t : tokens) t.tag = lexicon.lookup(t.text);
  return tokens;
}

std::vector<EntityGroup> extract_entities(const std::vector<Token>& tagged,
                                          const ParserOptions& options) {
  std::vector<EntityGroup> entities;
  const int n = static_cast<int>(tagged.size());
  int i = 0;
  while (i < n) {
    const int base_end = match_chunk(tagged, i);
    if (base_end == i) {
      ++i;
      continue;
    }
    int head = base_end - 1;  // last NOUN of the base chunk
    int end = base_end;
    while (end < n && tagged[end].tag == Tag::PREP &&
           options.is_attachment(tagged[end].text)) {
      const int sub_end = match_chunk(tagged, end + 1);
      if (sub_end == end + 1) break;
      end = sub_end;
    }
    entities.push_back(EntityGroup{TokenSpan{i, end}, head, join_text(tagged, i, end)});
    i = end;
  }
  if (entities.empty()) {
    throw NoEntityFound("extract_entities: no noun chunk in prompt");
  }
  return entities;
}

ParsedPrompt parse_prompt(const std::string& prompt, const Lexicon& lexicon,
                          const ParserOptions& options) {
  ParsedPrompt parsed;
  parsed.tokens = tag(tokenize(prompt), lexicon);
  parsed.entities = extract_entities(parsed.tokens, options);
  for (const Token& t : parsed.tokens) {
    if (parsed.entity_of(t.index) < 0) parsed.other_spans.push_back(t.index);
  }
  return parsed;
}

}  // namespace attnmod
