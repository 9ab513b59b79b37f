#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gujstem/lexicon.hpp"
#include "gujstem/script.hpp"

namespace gujstem {

enum class StemMode { SinglePass, Iterative };

enum class StemGuard {
  /// Stem must contain a consonant or independent vowel.
  OrthographicBase,
  /// Stem must be non-empty (always true for strict-suffix matches).
  NonEmptyOnly,
};

bool guard_accepts(StemGuard guard, ScalarView stem);

struct StemResult {
  NormalizedWord word;
  Scalars stem;
  /// Removed suffixes in removal order; the first entry was the word's
  /// outermost ending.
  std::vector<SuffixEntry> removed;

  /// `removed` joined by '+', empty when nothing was stripped.
  std::string suffix_chain() const;
};

/// Immutable stripping policy; cheap to copy, safe to share across threads.
class StemPolicy {
 public:
  explicit StemPolicy(std::shared_ptr<const SuffixLexicon> lexicon,
                      StemMode mode = StemMode::SinglePass,
                      StemGuard guard = StemGuard::OrthographicBase);
  explicit StemPolicy(SuffixLexicon lexicon,
                      StemMode mode = StemMode::SinglePass,
                      StemGuard guard = StemGuard::OrthographicBase);

  StemMode mode() const noexcept { return mode_; }
  StemGuard guard() const noexcept { return guard_; }
  const SuffixLexicon& lexicon() const noexcept { return *lexicon_; }

  StemPolicy with_mode(StemMode m) const { return StemPolicy(lexicon_, m, guard_); }
  StemPolicy with_guard(StemGuard g) const { return StemPolicy(lexicon_, mode_, g); }

 private:
  std::shared_ptr<const SuffixLexicon> lexicon_;
  StemMode mode_;
  StemGuard guard_;
};

StemResult stem(const StemPolicy& policy, const NormalizedWord& word);

std::vector<StemResult> stem_batch(const StemPolicy& policy,
                                   std::span<const NormalizedWord> words);

}  // namespace gujstem
