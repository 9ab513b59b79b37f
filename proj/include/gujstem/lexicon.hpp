#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gujstem/script.hpp"

namespace gujstem {

/// Where a suffix came from. Seed entries are tagged with the published
/// material they were taken from; anything else is `User`.
enum class SuffixSource { Figure1, Table8, Section4, User };

std::string_view to_string(SuffixSource s);
std::optional<SuffixSource> parse_suffix_source(std::string_view name);

struct SuffixEntry {
  Scalars suffix;
  SuffixSource source = SuffixSource::User;

  std::size_t length() const noexcept { return suffix.size(); }
  friend bool operator==(const SuffixEntry&, const SuffixEntry&) = default;
};

class LexiconError : public std::runtime_error {
 public:
  enum class Kind { DuplicateSuffix, InvalidScalar, EmptyLexicon, InvalidUtf8, BadDirective };

  LexiconError(Kind kind, std::size_t line, const std::string& detail);

  Kind kind() const noexcept { return kind_; }
  /// 1-based line (or entry) number; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

std::string_view to_string(LexiconError::Kind k);

/// Result of a successful suffix match: the matched entry and the remaining
/// stem, both views into the lexicon / the queried word.
struct SuffixMatch {
  const SuffixEntry* entry;
  ScalarView stem;
};

/// A validated, immutable suffix set indexed by a trie over reversed suffixes.
///
/// Walking the word from its last scalar down the trie visits every suffix
/// of the word that is in the lexicon, shortest first, so the longest match
/// costs O(max_suffix_len) regardless of lexicon size.
class SuffixLexicon {
 public:
  /// Validates and indexes. Entries are NFC-normalized first. Throws
  /// LexiconError; error line numbers are 1-based positions in `entries`.
  static SuffixLexicon from_entries(std::vector<SuffixEntry> entries);

  /// Entries sorted by length descending, then scalar sequence ascending.
  const std::vector<SuffixEntry>& enumerate() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t max_suffix_len() const noexcept { return max_len_; }
  bool contains(ScalarView suffix) const;

  /// Every lexicon suffix that is a strict suffix of `word` (leaves a
  /// non-empty remainder), longest first.
  std::vector<const SuffixEntry*> strict_suffixes_of(ScalarView word) const;

  /// Longest strict suffix whose remainder passes `guard`.
  template <class Guard>
  std::optional<SuffixMatch> longest_match(ScalarView word, Guard&& guard) const {
    for (const SuffixEntry* e : strict_suffixes_of(word)) {
      ScalarView stem = word.substr(0, word.size() - e->length());
      if (guard(stem)) return SuffixMatch{e, stem};
    }
    return std::nullopt;
  }
  /// The returned stem views `word`, so temporaries are rejected.
  template <class Guard>
  std::optional<SuffixMatch> longest_match(Scalars&& word, Guard&& guard) const = delete;

  /// Reconstructs the entry set from the trie alone (used to check the index
  /// against the entry list).
  std::vector<Scalars> trie_contents() const;

 private:
  struct Node {
    std::map<char32_t, std::uint32_t> children;
    std::optional<std::uint32_t> entry;
  };

  SuffixLexicon() = default;
  static SuffixLexicon build(std::vector<SuffixEntry> entries,
                             const std::vector<std::size_t>& lines);
  friend SuffixLexicon load_lexicon(std::istream& in);

  std::vector<SuffixEntry> entries_;
  std::vector<Node> nodes_;
  std::size_t max_len_ = 0;
};

/// Parses the lexicon file format: UTF-8, one suffix per line, ASCII
/// whitespace trimmed, blank lines and `#` comments skipped. A comment of
/// the form `#@source NAME` tags the following entries with that source.
SuffixLexicon load_lexicon(std::istream& in);
SuffixLexicon load_lexicon(std::string_view text);

}  // namespace gujstem
