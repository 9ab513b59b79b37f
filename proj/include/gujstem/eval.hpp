#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gujstem/script.hpp"
#include "gujstem/stemmer.hpp"

namespace gujstem {

enum class Verdict { Correct, OverStemmed, UnderStemmed, Other };

std::string_view to_string(Verdict v);

/// Prefix trichotomy between a predicted and a gold stem:
///   equal                     -> Correct
///   predicted strict prefix   -> OverStemmed (too much removed)
///   gold strict prefix        -> UnderStemmed (too little removed)
///   otherwise                 -> Other
Verdict judge(ScalarView predicted, ScalarView gold);

/// Word with its reference stem; the stem is a non-empty prefix of the word.
class GoldPair {
 public:
  static std::optional<GoldPair> make(NormalizedWord word, ScalarView gold_stem);

  const NormalizedWord& word() const noexcept { return word_; }
  const Scalars& gold_stem() const noexcept { return gold_stem_; }

 private:
  GoldPair(NormalizedWord w, Scalars s) : word_(std::move(w)), gold_stem_(std::move(s)) {}
  NormalizedWord word_;
  Scalars gold_stem_;
};

class GoldFormatError : public std::runtime_error {
 public:
  GoldFormatError(std::size_t line, const std::string& detail);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads `word<TAB>stem` lines; `#` comments and blank lines are skipped.
std::vector<GoldPair> load_gold(std::istream& in);
std::vector<GoldPair> load_gold(std::string_view text);

class EmptyGoldError : public std::runtime_error {
 public:
  EmptyGoldError() : std::runtime_error("EmptyGold: no gold pairs") {}
};

/// Exact accuracy as a reduced fraction.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Ratio reduced(std::uint64_t num, std::uint64_t den);
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Percent with exactly one decimal, rounded half up: 2745/3000 -> "91.5%".
std::string format_percent(Ratio r);
/// Value in [0, 1] to four significant figures: 2745/3000 -> "0.9150".
std::string format_sig4(Ratio r);

struct EvalReport {
  std::uint64_t total = 0;
  std::uint64_t correct = 0;
  std::uint64_t over_stemmed = 0;
  std::uint64_t under_stemmed = 0;
  std::uint64_t other_errors = 0;
  Ratio accuracy;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

/// Throws EmptyGoldError when `gold` is empty.
EvalReport evaluate(const StemPolicy& policy, std::span<const GoldPair> gold);

struct CorpusStats {
  std::uint64_t total_words = 0;
  std::uint64_t unique_words = 0;
  std::uint64_t multi_member_groups = 0;
  std::uint64_t single_member_groups = 0;
  std::uint64_t min_len = 0;
  std::uint64_t max_len = 0;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

/// Stem groups are formed over distinct words keyed by predicted stem.
CorpusStats corpus_stats(const StemPolicy& policy, std::span<const NormalizedWord> words);

/// Incremental form of corpus_stats for streaming input.
class CorpusStatsBuilder {
 public:
  void add(const NormalizedWord& word);
  CorpusStats finish(const StemPolicy& policy) const;

 private:
  std::uint64_t total_ = 0;
  std::set<NormalizedWord> distinct_;
};

}  // namespace gujstem
