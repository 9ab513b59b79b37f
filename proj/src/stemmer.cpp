#include "gujstem/stemmer.hpp"

#include <algorithm>
#include <stdexcept>

namespace gujstem {

bool guard_accepts(StemGuard guard, ScalarView stem) {
  switch (guard) {
    case StemGuard::OrthographicBase: return has_orthographic_base(stem);
    case StemGuard::NonEmptyOnly: return !stem.empty();
  }
  return false;
}

std::string StemResult::suffix_chain() const {
  std::string out;
  for (std::size_t i = 0; i < removed.size(); ++i) {
    if (i) out += '+';
    out += encode_utf8(removed[i].suffix);
  }
  return out;
}

StemPolicy::StemPolicy(std::shared_ptr<const SuffixLexicon> lexicon,
                       StemMode mode, StemGuard guard)
    : lexicon_(std::move(lexicon)), mode_(mode), guard_(guard) {
  if (!lexicon_) throw std::invalid_argument("StemPolicy requires a lexicon");
}

StemPolicy::StemPolicy(SuffixLexicon lexicon, StemMode mode, StemGuard guard)
    : StemPolicy(std::make_shared<const SuffixLexicon>(std::move(lexicon)),
                 mode, guard) {}

StemResult stem(const StemPolicy& policy, const NormalizedWord& word) {
  StemResult result{word, word.scalars(), {}};
  auto accept = [g = policy.guard()](ScalarView s) { return guard_accepts(g, s); };

  ScalarView current = word.scalars();
  do {
    auto match = policy.lexicon().longest_match(current, accept);
    if (!match) break;
    result.removed.push_back(*match->entry);
    // Each removal strictly shortens `current`, so the loop terminates.
    current = match->stem;
  } while (policy.mode() == StemMode::Iterative);

  result.stem.assign(current);
  return result;
}

std::vector<StemResult> stem_batch(const StemPolicy& policy,
                                   std::span<const NormalizedWord> words) {
  std::vector<StemResult> out;
  out.reserve(words.size());
  std::transform(words.begin(), words.end(), std::back_inserter(out),
                 [&](const NormalizedWord& w) { return stem(policy, w); });
  return out;
}

}  // namespace gujstem
