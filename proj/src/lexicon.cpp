#include "gujstem/lexicon.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace gujstem {

std::string_view to_string(SuffixSource s) {
  switch (s) {
    case SuffixSource::Figure1: return "figure1";
    case SuffixSource::Table8: return "table8";
    case SuffixSource::Section4: return "section4";
    case SuffixSource::User: return "user";
  }
  return "user";
}

std::optional<SuffixSource> parse_suffix_source(std::string_view name) {
  for (auto s : {SuffixSource::Figure1, SuffixSource::Table8,
                 SuffixSource::Section4, SuffixSource::User}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(LexiconError::Kind k) {
  using K = LexiconError::Kind;
  switch (k) {
    case K::DuplicateSuffix: return "DuplicateSuffix";
    case K::InvalidScalar: return "InvalidScalar";
    case K::EmptyLexicon: return "EmptyLexicon";
    case K::InvalidUtf8: return "InvalidUtf8";
    case K::BadDirective: return "BadDirective";
  }
  return "?";
}

namespace {

std::string describe(LexiconError::Kind kind, std::size_t line,
                     const std::string& detail) {
  std::ostringstream os;
  os << to_string(kind);
  if (line != 0) os << " at line " << line;
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

}  // namespace

LexiconError::LexiconError(Kind kind, std::size_t line, const std::string& detail)
    : std::runtime_error(describe(kind, line, detail)), kind_(kind), line_(line) {}

SuffixLexicon SuffixLexicon::from_entries(std::vector<SuffixEntry> entries) {
  std::vector<std::size_t> lines(entries.size());
  for (std::size_t i = 0; i < lines.size(); ++i) lines[i] = i + 1;
  return build(std::move(entries), lines);
}

SuffixLexicon SuffixLexicon::build(std::vector<SuffixEntry> entries,
                                   const std::vector<std::size_t>& lines) {
  using K = LexiconError::Kind;
  if (entries.empty()) throw LexiconError(K::EmptyLexicon, 0, "no suffixes");

  SuffixLexicon lex;
  lex.nodes_.emplace_back();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& e = entries[i];
    e.suffix = normalize(e.suffix);
    if (e.suffix.empty()) throw LexiconError(K::EmptyLexicon, lines[i], "empty suffix");
    for (char32_t c : e.suffix) {
      if (!in_gujarati_block(c)) {
        std::ostringstream os;
        os << "U+" << std::hex << std::uppercase << static_cast<std::uint32_t>(c)
           << " is outside the Gujarati block";
        throw LexiconError(K::InvalidScalar, lines[i], os.str());
      }
    }

    std::uint32_t node = 0;
    for (auto it = e.suffix.rbegin(); it != e.suffix.rend(); ++it) {
      auto found = lex.nodes_[node].children.find(*it);
      if (found == lex.nodes_[node].children.end()) {
        auto next = static_cast<std::uint32_t>(lex.nodes_.size());
        lex.nodes_[node].children.emplace(*it, next);
        lex.nodes_.emplace_back();
        node = next;
      } else {
        node = found->second;
      }
    }
    if (lex.nodes_[node].entry) {
      throw LexiconError(K::DuplicateSuffix, lines[i],
                         "'" + encode_utf8(e.suffix) + "' first seen at line " +
                             std::to_string(lines[*lex.nodes_[node].entry]));
    }
    lex.nodes_[node].entry = static_cast<std::uint32_t>(i);
    lex.max_len_ = std::max(lex.max_len_, e.length());
  }

  // Re-point terminals at the entries' sorted positions.
  std::vector<std::uint32_t> order(entries.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto& x = entries[a].suffix;
    const auto& y = entries[b].suffix;
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  std::vector<std::uint32_t> rank(entries.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  for (auto& n : lex.nodes_) {
    if (n.entry) n.entry = rank[*n.entry];
  }
  lex.entries_.reserve(entries.size());
  for (auto i : order) lex.entries_.push_back(std::move(entries[i]));
  return lex;
}

bool SuffixLexicon::contains(ScalarView suffix) const {
  std::uint32_t node = 0;
  for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) {
    auto found = nodes_[node].children.find(*it);
    if (found == nodes_[node].children.end()) return false;
    node = found->second;
  }
  return !suffix.empty() && nodes_[node].entry.has_value();
}

std::vector<const SuffixEntry*> SuffixLexicon::strict_suffixes_of(ScalarView word) const {
  std::vector<const SuffixEntry*> found;
  std::uint32_t node = 0;
  // depth < word.size(): a match must leave at least one scalar behind.
  for (std::size_t depth = 0; depth + 1 < word.size(); ++depth) {
    const auto& children = nodes_[node].children;
    auto it = children.find(word[word.size() - 1 - depth]);
    if (it == children.end()) break;
    node = it->second;
    if (nodes_[node].entry) found.push_back(&entries_[*nodes_[node].entry]);
  }
  std::reverse(found.begin(), found.end());
  return found;
}

std::vector<Scalars> SuffixLexicon::trie_contents() const {
  std::vector<Scalars> out;
  Scalars path;
  auto walk = [&](auto&& self, std::uint32_t node) -> void {
    if (nodes_[node].entry) out.emplace_back(path.rbegin(), path.rend());
    for (const auto& [c, child] : nodes_[node].children) {
      path.push_back(c);
      self(self, child);
      path.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

namespace {

constexpr std::string_view kAsciiSpace = " \t\r\n\v\f";

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(kAsciiSpace);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(kAsciiSpace);
  return s.substr(b, e - b + 1);
}

}  // namespace

SuffixLexicon load_lexicon(std::istream& in) {
  using K = LexiconError::Kind;
  std::vector<SuffixEntry> entries;
  std::vector<std::size_t> lines;
  SuffixSource source = SuffixSource::User;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (lineno == 1 && line.starts_with("\xEF\xBB\xBF")) line = trim(line.substr(3));
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kDirective = "#@source";
      if (line.starts_with(kDirective)) {
        auto name = trim(line.substr(kDirective.size()));
        auto parsed = parse_suffix_source(name);
        if (!parsed) {
          throw LexiconError(K::BadDirective, lineno,
                             "unknown source '" + std::string(name) + "'");
        }
        source = *parsed;
      }
      continue;
    }
    Scalars suffix;
    try {
      suffix = decode_utf8(line);
    } catch (const Utf8Error&) {
      throw LexiconError(K::InvalidUtf8, lineno, "line is not valid UTF-8");
    }
    entries.push_back({std::move(suffix), source});
    lines.push_back(lineno);
  }
  if (entries.empty()) throw LexiconError(K::EmptyLexicon, 0, "no suffixes");
  return SuffixLexicon::build(std::move(entries), lines);
}

SuffixLexicon load_lexicon(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_lexicon(in);
}

}  // namespace gujstem
