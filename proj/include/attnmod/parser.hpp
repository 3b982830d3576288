#ifndef ATTNMOD_PARSER_HPP
#define ATTNMOD_PARSER_HPP

#include <string>
#include <vector>

#include "attnmod/lexicon.hpp"
#include "attnmod/prompt.hpp"

namespace attnmod {

struct ParserOptions {
  /// Prepositions that pull a trailing noun chunk into the preceding entity
  /// ("a young boy with a hat"). Everything else stays layout information.
  std::vector<std::string> attachment_preps = {"with", "wearing", "holding", "of"};

  bool is_attachment(const std::string& word) const;
};

/// Lowercases and splits on non-alphanumeric characters; punctuation-only
/// fragments are dropped. Throws EmptyPrompt when no alphabetic token remains.
std::vector<Token> tokenize(const std::string& prompt);

/// Tags every token from the lexicon. Total: unknown words default to NOUN,
/// all-digit tokens to NUM.
std::vector<Token> tag(std::vector<Token> tokens, const Lexicon& lexicon);

/// Emits maximal chunks matching (DET|NUM)? ADJ* NOUN+, each optionally
/// extended by attachment-preposition sub-chunks. The head noun is the last
/// NOUN of the base chunk. Throws NoEntityFound when nothing matches.
std::vector<EntityGroup> extract_entities(const std::vector<Token>& tagged,
                                          const ParserOptions& options = {});

/// tokenize -> tag -> extract_entities; other_spans collects every tagged
/// index outside the entity spans.
ParsedPrompt parse_prompt(const std::string& prompt,
                          const Lexicon& lexicon = Lexicon::builtin(),
                          const ParserOptions& options = {});

}  // namespace attnmod

#endif  // ATTNMOD_PARSER_HPP
