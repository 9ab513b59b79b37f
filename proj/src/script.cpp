#include "gujstem/script.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/ustring.h>

#include <algorithm>

namespace gujstem {

Scalars decode_utf8(std::string_view bytes) {
  if (bytes.empty()) return {};
  UErrorCode status = U_ZERO_ERROR;
  int32_t utf16_len = 0;
  u_strFromUTF8(nullptr, 0, &utf16_len, bytes.data(),
                static_cast<int32_t>(bytes.size()), &status);
  if (status != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(status)) {
    throw Utf8Error("invalid UTF-8 input");
  }
  std::u16string utf16(static_cast<std::size_t>(utf16_len), u'\0');
  status = U_ZERO_ERROR;
  u_strFromUTF8(utf16.data(), utf16_len, nullptr, bytes.data(),
                static_cast<int32_t>(bytes.size()), &status);
  if (U_FAILURE(status)) throw Utf8Error("invalid UTF-8 input");

  Scalars out;
  out.reserve(utf16.size());
  icu::UnicodeString us(false, utf16.data(), utf16_len);
  for (int32_t i = 0; i < us.length();) {
    UChar32 c = us.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

std::string encode_utf8(ScalarView scalars) {
  icu::UnicodeString us = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(scalars.data()),
      static_cast<int32_t>(scalars.size()));
  std::string out;
  us.toUTF8String(out);
  return out;
}

std::string_view to_string(CodepointClass c) {
  switch (c) {
    case CodepointClass::IndependentVowel: return "IndependentVowel";
    case CodepointClass::Consonant: return "Consonant";
    case CodepointClass::VowelSign: return "VowelSign";
    case CodepointClass::Anusvara: return "Anusvara";
    case CodepointClass::Visarga: return "Visarga";
    case CodepointClass::Candrabindu: return "Candrabindu";
    case CodepointClass::Virama: return "Virama";
    case CodepointClass::Nukta: return "Nukta";
    case CodepointClass::Digit: return "Digit";
    case CodepointClass::Other: return "Other";
  }
  return "Other";
}

CodepointClass classify(char32_t c) {
  // Gujarati block layout as of Unicode 15.
  if (c == 0x0A81) return CodepointClass::Candrabindu;
  if (c == 0x0A82) return CodepointClass::Anusvara;
  if (c == 0x0A83) return CodepointClass::Visarga;
  if (c >= 0x0A85 && c <= 0x0A94) return CodepointClass::IndependentVowel;
  if (c == 0x0AE0 || c == 0x0AE1) return CodepointClass::IndependentVowel;
  if (c >= 0x0A95 && c <= 0x0AB9) return CodepointClass::Consonant;
  if (c == 0x0AF9) return CodepointClass::Consonant;
  if (c == 0x0ABC) return CodepointClass::Nukta;
  if (c >= 0x0ABE && c <= 0x0ACC) return CodepointClass::VowelSign;
  if (c == 0x0AE2 || c == 0x0AE3) return CodepointClass::VowelSign;
  if (c == 0x0ACD) return CodepointClass::Virama;
  if (c >= 0x0AE6 && c <= 0x0AEF) return CodepointClass::Digit;
  return CodepointClass::Other;
}

namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  return *n;
}

}  // namespace

Scalars normalize(ScalarView text) {
  if (text.empty()) return {};
  const auto& n = nfc();
  icu::UnicodeString src = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(text.data()),
      static_cast<int32_t>(text.size()));
  UErrorCode status = U_ZERO_ERROR;
  if (n.isNormalized(src, status) && U_SUCCESS(status)) {
    return Scalars(text);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString dst = n.normalize(src, status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");

  Scalars out(static_cast<std::size_t>(dst.countChar32()), U'\0');
  status = U_ZERO_ERROR;
  dst.toUTF32(reinterpret_cast<UChar32*>(out.data()),
              static_cast<int32_t>(out.size()), status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");
  return out;
}

std::string normalize_utf8(std::string_view text) {
  return encode_utf8(normalize(decode_utf8(text)));
}

bool has_orthographic_base(ScalarView word) {
  return std::any_of(word.begin(), word.end(), [](char32_t c) {
    auto k = classify(c);
    return k == CodepointClass::Consonant ||
           k == CodepointClass::IndependentVowel;
  });
}

std::optional<NormalizedWord> NormalizedWord::make(ScalarView text) {
  Scalars s = normalize(text);
  if (s.empty()) return std::nullopt;
  for (char32_t c : s) {
    if (!in_gujarati_block(c) && !is_joiner(c)) return std::nullopt;
  }
  return NormalizedWord(std::move(s));
}

std::optional<NormalizedWord> NormalizedWord::from_utf8(std::string_view text) {
  return make(decode_utf8(text));
}

namespace {

bool is_word_scalar(char32_t c) {
  return (in_gujarati_block(c) && classify(c) != CodepointClass::Digit) ||
         is_joiner(c);
}

}  // namespace

std::vector<NormalizedWord> tokenize(ScalarView text) {
  std::vector<NormalizedWord> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_scalar(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_word_scalar(text[j])) ++j;
    std::size_t b = i, e = j;
    while (b < e && is_joiner(text[b])) ++b;
    while (e > b && is_joiner(text[e - 1])) --e;
    if (b < e) {
      if (auto w = NormalizedWord::make(text.substr(b, e - b))) {
        out.push_back(std::move(*w));
      }
    }
    i = j;
  }
  return out;
}

std::vector<NormalizedWord> tokenize_utf8(std::string_view text) {
  return tokenize(decode_utf8(text));
}

}  // namespace gujstem
