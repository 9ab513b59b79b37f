#include "gujstem/eval.hpp"

#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace gujstem {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Correct: return "correct";
    case Verdict::OverStemmed: return "over-stemmed";
    case Verdict::UnderStemmed: return "under-stemmed";
    case Verdict::Other: return "other";
  }
  return "other";
}

Verdict judge(ScalarView predicted, ScalarView gold) {
  if (predicted == gold) return Verdict::Correct;
  if (gold.starts_with(predicted)) return Verdict::OverStemmed;
  if (predicted.starts_with(gold)) return Verdict::UnderStemmed;
  return Verdict::Other;
}

std::optional<GoldPair> GoldPair::make(NormalizedWord word, ScalarView gold_stem) {
  Scalars stem = normalize(gold_stem);
  if (stem.empty() || !ScalarView(word.scalars()).starts_with(stem)) {
    return std::nullopt;
  }
  return GoldPair(std::move(word), std::move(stem));
}

GoldFormatError::GoldFormatError(std::size_t line, const std::string& detail)
    : std::runtime_error("gold line " + std::to_string(line) + ": " + detail),
      line_(line) {}

std::vector<GoldPair> load_gold(std::istream& in) {
  std::vector<GoldPair> out;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (lineno == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (line.front() == '#') continue;

    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw GoldFormatError(lineno, "expected word<TAB>stem, found no tab");
    }
    if (line.find('\t', tab + 1) != std::string_view::npos) {
      throw GoldFormatError(lineno, "expected exactly one tab");
    }
    std::optional<NormalizedWord> word;
    Scalars stem;
    try {
      word = NormalizedWord::from_utf8(line.substr(0, tab));
      stem = decode_utf8(line.substr(tab + 1));
    } catch (const Utf8Error&) {
      throw GoldFormatError(lineno, "invalid UTF-8");
    }
    if (!word) throw GoldFormatError(lineno, "word is empty or not Gujarati");
    auto pair = GoldPair::make(std::move(*word), stem);
    if (!pair) {
      throw GoldFormatError(lineno, "gold stem must be a non-empty prefix of the word");
    }
    out.push_back(std::move(*pair));
  }
  return out;
}

std::vector<GoldPair> load_gold(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_gold(in);
}

Ratio Ratio::reduced(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  auto g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

namespace {

__extension__ typedef unsigned __int128 u128;

// round(num * scale / den), halves rounded up.
u128 scaled_round(Ratio r, u128 scale) {
  u128 n = static_cast<u128>(r.num) * scale * 2 + r.den;
  return n / (static_cast<u128>(r.den) * 2);
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace

std::string format_percent(Ratio r) {
  auto tenths = scaled_round(r, 1000);
  return u128_to_string(tenths / 10) + "." + u128_to_string(tenths % 10) + "%";
}

std::string format_sig4(Ratio r) {
  if (r.num > r.den) throw std::invalid_argument("format_sig4 expects a value in [0, 1]");
  if (r.num == 0) return "0.000";
  if (r.num == r.den) return "1.000";
  // Scale by 10^k until the value lies in [0.1, 1), then take four digits.
  int k = 0;
  u128 num = r.num;
  while (num * 10 < r.den) {
    num *= 10;
    ++k;
  }
  u128 digits = (num * 10000 * 2 + r.den) / (static_cast<u128>(r.den) * 2);
  if (digits == 10000) {  // rounding carried into the next decade
    if (k == 0) return "1.000";
    digits = 1000;
    --k;
  }
  return "0." + std::string(static_cast<std::size_t>(k), '0') + u128_to_string(digits);
}

EvalReport evaluate(const StemPolicy& policy, std::span<const GoldPair> gold) {
  if (gold.empty()) throw EmptyGoldError();
  EvalReport rep;
  for (const auto& pair : gold) {
    auto result = stem(policy, pair.word());
    switch (judge(result.stem, pair.gold_stem())) {
      case Verdict::Correct: ++rep.correct; break;
      case Verdict::OverStemmed: ++rep.over_stemmed; break;
      case Verdict::UnderStemmed: ++rep.under_stemmed; break;
      case Verdict::Other: ++rep.other_errors; break;
    }
    ++rep.total;
  }
  rep.accuracy = Ratio::reduced(rep.correct, rep.total);
  return rep;
}

void CorpusStatsBuilder::add(const NormalizedWord& word) {
  ++total_;
  distinct_.insert(word);
}

CorpusStats CorpusStatsBuilder::finish(const StemPolicy& policy) const {
  CorpusStats s;
  s.total_words = total_;
  s.unique_words = distinct_.size();
  if (distinct_.empty()) return s;

  std::map<Scalars, std::uint64_t> groups;
  s.min_len = distinct_.begin()->length();
  for (const auto& w : distinct_) {
    ++groups[stem(policy, w).stem];
    s.min_len = std::min<std::uint64_t>(s.min_len, w.length());
    s.max_len = std::max<std::uint64_t>(s.max_len, w.length());
  }
  for (const auto& [key, size] : groups) {
    (size > 1 ? s.multi_member_groups : s.single_member_groups) += 1;
  }
  return s;
}

CorpusStats corpus_stats(const StemPolicy& policy, std::span<const NormalizedWord> words) {
  CorpusStatsBuilder b;
  for (const auto& w : words) b.add(w);
  return b.finish(policy);
}

}  // namespace gujstem
