#ifndef ATTNMOD_PROMPT_HPP
#define ATTNMOD_PROMPT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "attnmod/types.hpp"

namespace attnmod {

enum class Tag { DET, ADJ, NOUN, NUM, PREP, VERB, CONJ, OTHER };

const char* tag_name(Tag tag);
Tag tag_from_name(const std::string& name);  // throws ConfigError on unknown names

struct Token {
  std::string text;
  int index = 0;
  Tag tag = Tag::OTHER;
};

/// Half-open token index range [start, end).
struct TokenSpan {
  int start = 0;
  int end = 0;

  bool contains(int t) const { return t >= start && t < end; }
  int length() const { return end - start; }
  bool operator==(const TokenSpan&) const = default;
};

/// A noun chunk plus any attached attribute phrases.
struct EntityGroup {
  TokenSpan span;
  int head_noun_index = 0;
  std::string label;  // space-joined surface text of the span
};

/// Output of the prompt decomposition: every surviving token index lands in
/// exactly one entity span or in other_spans (punctuation never reaches
/// tagging, so the discard set is consumed during tokenization).
struct ParsedPrompt {
  std::vector<Token> tokens;
  std::vector<EntityGroup> entities;   // document order
  std::vector<int> other_spans;        // sorted token indices

  int entity_count() const { return static_cast<int>(entities.size()); }

  /// Index of the entity whose span contains t, or -1.
  int entity_of(int t) const {
    for (size_t i = 0; i < entities.size(); ++i) {
      if (entities[i].span.contains(t)) return static_cast<int>(i);
    }
    return -1;
  }

  bool is_other(int t) const {
    return std::binary_search(other_spans.begin(), other_spans.end(), t);
  }
};

}  // namespace attnmod

#endif  // ATTNMOD_PROMPT_HPP
