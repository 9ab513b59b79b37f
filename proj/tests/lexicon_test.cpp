#include "gujstem/lexicon.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace gujstem {
namespace {

Scalars U(std::string_view s) { return decode_utf8(s); }

const std::string& seed_text() {
  static const std::string text = testing::read_file(GUJSTEM_SEED_LEXICON);
  return text;
}

const SuffixLexicon& seed() {
  static const SuffixLexicon lex = load_lexicon(std::string_view(seed_text()));
  return lex;
}

auto base_guard = [](ScalarView s) { return has_orthographic_base(s); };
auto any_guard = [](ScalarView) { return true; };

LexiconError::Kind load_error(std::string_view text) {
  try {
    load_lexicon(text);
  } catch (const LexiconError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected LexiconError";
  return LexiconError::Kind::BadDirective;
}

TEST(LoadLexicon, Table8Suffixes) {
  auto lex = load_lexicon(std::string_view("ી\nોમાં\nને\n"));
  EXPECT_EQ(lex.size(), 3u);
  EXPECT_EQ(lex.max_suffix_len(), 4u);
}

TEST(LoadLexicon, Errors) {
  using K = LexiconError::Kind;
  EXPECT_EQ(load_error("ી\nી\n"), K::DuplicateSuffix);
  EXPECT_EQ(load_error("# only\n# comments\n\n"), K::EmptyLexicon);
  EXPECT_EQ(load_error(""), K::EmptyLexicon);
  EXPECT_EQ(load_error("ી\nxો\n"), K::InvalidScalar);
  EXPECT_EQ(load_error("ી\n\xC3\n"), K::InvalidUtf8);
  EXPECT_EQ(load_error("#@source poster\nી\n"), K::BadDirective);
  // Zero-width joiners never belong in a suffix.
  EXPECT_EQ(load_error("\xE2\x80\x8Dી\n"), K::InvalidScalar);
}

TEST(LoadLexicon, ErrorNamesLine) {
  try {
    load_lexicon(std::string_view("# header\nી\n\nને\nી\n"));
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.kind(), LexiconError::Kind::DuplicateSuffix);
    EXPECT_EQ(e.line(), 5u);
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos);
  }
}

TEST(LoadLexicon, DuplicateAfterNormalization) {
  // ક + virama + nukta normalizes to ક + nukta + virama.
  EXPECT_EQ(load_error("\u0A95\u0ACD\u0ABC\n\u0A95\u0ABC\u0ACD\n"),
            LexiconError::Kind::DuplicateSuffix);
}

TEST(LoadLexicon, TrimsWhitespaceAndTracksSource) {
  auto lex = load_lexicon(std::string_view("  ી \t\r\n#@source table8\nને\n#@source user\nના\n"));
  ASSERT_EQ(lex.size(), 3u);
  std::map<Scalars, SuffixSource> src;
  for (const auto& e : lex.enumerate()) src[e.suffix] = e.source;
  EXPECT_EQ(src[U("ી")], SuffixSource::User);
  EXPECT_EQ(src[U("ને")], SuffixSource::Table8);
  EXPECT_EQ(src[U("ના")], SuffixSource::User);
}

TEST(SeedLexicon, IsTheDeduplicatedPublishedUnion) {
  // 20 printed Figure 1 cells with one repeat, six new Table 8 endings, and
  // the one inferred from સેવાનો.
  std::set<std::string> figure1 = {"ાઓમાનું", "ાઓનાં", "ીમાંથી", "ીઓને", "ીમાંથી",
                                   "ાથેલો", "માંની", "ાઓ", "ાથ", "ીશ",
                                   "સ્વી", "િક", "થી", "વી", "તું",
                                   "ના", "ો", "ી", "ે", "ા"};
  std::set<std::string> all = figure1;
  for (const auto& r : testing::kTable8) all.insert(std::string(r.suffix));
  all.insert("વાનો");
  ASSERT_EQ(figure1.size(), 19u);
  ASSERT_EQ(all.size(), 26u);

  EXPECT_EQ(seed().size(), all.size());
  for (const auto& s : all) EXPECT_TRUE(seed().contains(U(s))) << s;

  std::map<SuffixSource, int> per_source;
  for (const auto& e : seed().enumerate()) ++per_source[e.source];
  EXPECT_EQ(per_source[SuffixSource::Figure1], 19);
  EXPECT_EQ(per_source[SuffixSource::Table8], 6);
  EXPECT_EQ(per_source[SuffixSource::Section4], 1);
  EXPECT_EQ(seed().max_suffix_len(), 7u);
}

TEST(Enumerate, LengthThenScalarOrder) {
  auto a = load_lexicon(std::string_view("ી\nોમાં\n"));
  ASSERT_EQ(a.enumerate().size(), 2u);
  EXPECT_EQ(a.enumerate()[0].suffix, U("ોમાં"));
  EXPECT_EQ(a.enumerate()[1].suffix, U("ી"));

  auto b = load_lexicon(std::string_view("ને\nના\n"));
  EXPECT_EQ(b.enumerate()[0].suffix, U("ના"));
  EXPECT_EQ(b.enumerate()[1].suffix, U("ને"));
}

TEST(Enumerate, TrieHoldsExactlyTheEntries) {
  std::vector<Scalars> from_trie = seed().trie_contents();
  std::vector<Scalars> from_entries;
  for (const auto& e : seed().enumerate()) from_entries.push_back(e.suffix);
  std::sort(from_trie.begin(), from_trie.end());
  std::sort(from_entries.begin(), from_entries.end());
  EXPECT_EQ(from_trie, from_entries);

  std::size_t longest = 0;
  for (const auto& s : from_entries) longest = std::max(longest, s.size());
  EXPECT_EQ(seed().max_suffix_len(), longest);
}

TEST(LongestMatch, Table8Word) {
  const Scalars word = U("વિસ્તારોમાં");
  auto m = seed().longest_match(word, base_guard);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->entry->suffix, U("ોમાં"));
  EXPECT_EQ(Scalars(m->stem), U("વિસ્તાર"));
}

TEST(LongestMatch, NoSeedSuffixOnDesh) {
  const Scalars word = U("દેશ");
  EXPECT_FALSE(seed().longest_match(word, base_guard));
  EXPECT_FALSE(seed().longest_match(word, any_guard));
}

TEST(LongestMatch, WholeWordIsNeverASuffixMatch) {
  const Scalars word = U("થી");
  auto m = seed().longest_match(word, base_guard);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->entry->suffix, U("ી"));
  EXPECT_EQ(Scalars(m->stem), U("થ"));
  const Scalars matra = U("ી");
  EXPECT_FALSE(seed().longest_match(matra, any_guard));
}

TEST(LongestMatch, GuardFallsBackToShorterSuffix) {
  // "ોમાં" would leave the bare matra "ા"; the guard rejects it and no
  // shorter seed suffix ends this word with a passing remainder.
  auto word = U("ાોમાં");
  EXPECT_FALSE(seed().longest_match(word, base_guard));
  auto m = seed().longest_match(word, any_guard);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->entry->suffix, U("ોમાં"));
}

TEST(LongestMatch, AgreesWithLinearScan) {
  auto ordered = testing::scan_suffix_list(seed_text());
  testing::WordGenerator gen(ordered, 1234);
  for (int i = 0; i < 20000; ++i) {
    Scalars w = gen.next();
    for (bool use_base : {true, false}) {
      auto guard = [&](ScalarView s) { return use_base ? testing::oracle_has_base(s) : true; };
      auto want = testing::linear_scan_match(ordered, w, guard);
      auto got = seed().longest_match(w, guard);
      ASSERT_EQ(got.has_value(), want.has_value()) << encode_utf8(w);
      if (got) {
        ASSERT_EQ(got->entry->suffix, want->first);
        ASSERT_EQ(Scalars(got->stem), want->second);
        ASSERT_EQ(Scalars(got->stem) + got->entry->suffix, w);
      }
    }
  }
}

TEST(LongestMatch, AddingASuffixNeverShortensTheMatch) {
  auto ordered = testing::scan_suffix_list(seed_text());
  testing::WordGenerator gen(ordered, 99);
  std::vector<SuffixEntry> entries = seed().enumerate();
  const std::vector<Scalars> extras = {U("માં"), U("ીઓ"), U("રી"), U("ં"), U("ાનો")};
  for (const auto& extra : extras) {
    auto grown_entries = entries;
    grown_entries.push_back({extra, SuffixSource::User});
    auto grown = SuffixLexicon::from_entries(grown_entries);
    for (int i = 0; i < 3000; ++i) {
      Scalars w = gen.next();
      auto before = seed().longest_match(w, base_guard);
      auto after = grown.longest_match(w, base_guard);
      if (before) {
        ASSERT_TRUE(after);
        ASSERT_GE(after->entry->length(), before->entry->length());
      }
    }
  }
}

}  // namespace
}  // namespace gujstem
