#pragma once

#include <array>
#include <string>
#include <string_view>

namespace gujstem::testing {

struct Table8Row {
  std::string_view word, stem, suffix;
};

// Word / Stem / Suffix rows as published.
inline constexpr std::array<Table8Row, 9> kTable8 = {{
    {"શહેરી", "શહેર", "ી"},
    {"વિસ્તારોમાં", "વિસ્તાર", "ોમાં"},
    {"ભાજપનો", "ભાજપ", "નો"},
    {"સફાથો", "સફ", "ાથો"},
    {"દેશને", "દેશ", "ને"},
    {"બુટાસિંહને", "બુટાસિંહ", "ને"},
    {"અદાલતને", "અદાલત", "ને"},
    {"અસીલોએ", "અસીલ", "ોએ"},
    {"વકીલોની", "વકીલ", "ોની"},
}};

struct SyntheticGold {
  std::string tsv;
  std::size_t correct = 0, over = 0, under = 0;
};

/// 3000 gold pairs with 255 planted errors: 189 over-stemmed (સેવાનો, gold
/// સેવા, stemmer yields સે) and 66 under-stemmed (દેશ, gold દે, stemmer
/// leaves દેશ). The remaining 2745 pairs cycle through the Table 8 rows.
inline SyntheticGold make_synthetic_gold() {
  SyntheticGold g;
  g.tsv = "# synthetic 3000-pair fixture\n";
  for (std::size_t i = 0; i < 3000; ++i) {
    if (i % 12 == 5 && g.over < 189) {
      g.tsv += "સેવાનો\tસેવા\n";
      ++g.over;
    } else if (i % 12 == 11 && g.under < 66) {
      g.tsv += "દેશ\tદે\n";
      ++g.under;
    } else {
      const auto& r = kTable8[i % kTable8.size()];
      g.tsv += std::string(r.word) + "\t" + std::string(r.stem) + "\n";
      ++g.correct;
    }
  }
  return g;
}

}  // namespace gujstem::testing
