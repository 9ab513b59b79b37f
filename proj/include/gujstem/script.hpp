#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gujstem {

/// A sequence of Unicode scalar values. All matching in this library is
/// done on scalars, never on UTF-8 bytes.
using Scalars = std::u32string;
using ScalarView = std::u32string_view;

inline constexpr char32_t kGujaratiFirst = 0x0A80;
inline constexpr char32_t kGujaratiLast = 0x0AFF;
inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;

class Utf8Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strict UTF-8 decoding; throws Utf8Error on ill-formed input.
Scalars decode_utf8(std::string_view bytes);
std::string encode_utf8(ScalarView scalars);

enum class CodepointClass {
  IndependentVowel,
  Consonant,
  VowelSign,
  Anusvara,
  Visarga,
  Candrabindu,
  Virama,
  Nukta,
  Digit,
  Other,
};

std::string_view to_string(CodepointClass c);

CodepointClass classify(char32_t scalar);

constexpr bool in_gujarati_block(char32_t c) {
  return c >= kGujaratiFirst && c <= kGujaratiLast;
}

constexpr bool is_joiner(char32_t c) { return c == kZwj || c == kZwnj; }

/// Canonical composition (NFC). Idempotent.
Scalars normalize(ScalarView text);
std::string normalize_utf8(std::string_view text);

/// True iff some scalar is a consonant or an independent vowel.
bool has_orthographic_base(ScalarView word);

/// One NFC-normalized Gujarati token: non-empty, and every scalar is in the
/// Gujarati block or is ZWJ/ZWNJ.
class NormalizedWord {
 public:
  /// Normalizes `text` and checks the invariants; nullopt if they fail.
  static std::optional<NormalizedWord> make(ScalarView text);
  static std::optional<NormalizedWord> from_utf8(std::string_view text);

  const Scalars& scalars() const noexcept { return scalars_; }
  std::size_t length() const noexcept { return scalars_.size(); }
  std::string utf8() const { return encode_utf8(scalars_); }

  friend bool operator==(const NormalizedWord&, const NormalizedWord&) = default;
  friend auto operator<=>(const NormalizedWord&, const NormalizedWord&) = default;

 private:
  explicit NormalizedWord(Scalars s) : scalars_(std::move(s)) {}
  Scalars scalars_;
};

/// Splits text into maximal runs of Gujarati-block scalars. Gujarati digits
/// and everything outside the block are delimiters; ZWJ/ZWNJ are kept inside
/// a run but trimmed from its edges.
std::vector<NormalizedWord> tokenize(ScalarView text);
std::vector<NormalizedWord> tokenize_utf8(std::string_view text);

}  // namespace gujstem
