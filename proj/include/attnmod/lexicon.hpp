#ifndef ATTNMOD_LEXICON_HPP
#define ATTNMOD_LEXICON_HPP

#include <string>
#include <unordered_map>

#include "attnmod/prompt.hpp"

namespace attnmod {

/// Word -> part-of-speech table. Lookup of an unlisted word defaults to
/// NOUN: in caption text, out-of-vocabulary words are overwhelmingly object
/// names, and failing open keeps their entities detectable.
class Lexicon {
 public:
  /// The compiled-in caption-English table (see data/lexicon.tsv for the
  /// same contents in file form).
  static const Lexicon& builtin();

  /// Loads a standalone table from a UTF-8 file with one `word<TAB>TAG`
  /// line per entry. Blank lines and lines starting with '#' are skipped.
  static Lexicon load(const std::string& path);

  Tag lookup(const std::string& word) const;

  void set(const std::string& word, Tag tag) { words_[word] = tag; }
  size_t size() const { return words_.size(); }
  const std::unordered_map<std::string, Tag>& entries() const { return words_; }

 private:
  std::unordered_map<std::string, Tag> words_;
};

}  // namespace attnmod

#endif  // ATTNMOD_LEXICON_HPP
