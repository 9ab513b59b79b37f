#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "gujstem/eval.hpp"
#include "gujstem/lexicon.hpp"
#include "gujstem/script.hpp"

#ifndef GUJSTEM_DATA_DIR
#define GUJSTEM_DATA_DIR "data"
#endif

namespace gujstem::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kDefaultLexicon = "data/gujarati_suffixes.txt";

std::string resolve_lexicon_path(const std::string& path) {
  if (path == kDefaultLexicon && !fs::exists(path)) {
    fs::path bundled = fs::path(GUJSTEM_DATA_DIR) / "gujarati_suffixes.txt";
    if (fs::exists(bundled)) return bundled.string();
  }
  return path;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

StemPolicy make_policy(const RunConfig& config) {
  return StemPolicy(load_lexicon_file(config.lexicon_path), config.mode, config.guard);
}

/// Loads the lexicon, mapping its failures onto exit codes. Returns nullopt
/// after reporting to `err`.
std::optional<StemPolicy> policy_or_report(const RunConfig& config, std::ostream& err,
                                           int& code) {
  try {
    return make_policy(config);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    code = kIoError;
  } catch (const LexiconError& e) {
    err << "error: lexicon '" << config.lexicon_path << "': " << e.what() << '\n';
    code = kDataError;
  }
  return std::nullopt;
}

/// Decodes one input line; throws Utf8Error with the line number attached.
Scalars decode_line(const std::string& line, std::size_t lineno) {
  try {
    return decode_utf8(line);
  } catch (const Utf8Error&) {
    throw Utf8Error("input line " + std::to_string(lineno) + " is not valid UTF-8");
  }
}

int finish_output(std::ostream& out, std::ostream& err) {
  out.flush();
  if (!out) {
    err << "error: write failed\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace

SuffixLexicon load_lexicon_file(const std::string& path) {
  auto in = open_input(resolve_lexicon_path(path));
  auto lexicon = load_lexicon(in);
  if (in.bad()) throw IoError("read error on '" + path + "'");
  return lexicon;
}

int cmd_stem(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto policy = policy_or_report(config, err, code);
  if (!policy) return code;

  std::string line;
  std::size_t lineno = 0;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      for (const auto& word : tokenize(decode_line(line, lineno))) {
        auto r = stem(*policy, word);
        out << word.utf8() << '\t' << encode_utf8(r.stem) << '\t' << r.suffix_chain() << '\n';
      }
    }
  } catch (const Utf8Error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  if (in.bad()) {
    err << "error: read failed\n";
    return kIoError;
  }
  return finish_output(out, err);
}

int cmd_eval(const RunConfig& config, const std::string& gold_path, std::ostream& out,
             std::ostream& err) {
  int code = kOk;
  auto policy = policy_or_report(config, err, code);
  if (!policy) return code;

  std::vector<GoldPair> gold;
  EvalReport rep;
  try {
    auto in = open_input(gold_path);
    gold = load_gold(in);
    if (in.bad()) throw IoError("read error on '" + gold_path + "'");
    rep = evaluate(*policy, gold);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const GoldFormatError& e) {
    err << "error: " << gold_path << ": " << e.what() << '\n';
    return kDataError;
  } catch (const EmptyGoldError& e) {
    err << "error: " << gold_path << ": " << e.what() << '\n';
    return kDataError;
  }

  if (config.json) {
    nlohmann::ordered_json j;
    j["total"] = rep.total;
    j["correct"] = rep.correct;
    j["over_stemmed"] = rep.over_stemmed;
    j["under_stemmed"] = rep.under_stemmed;
    j["other"] = rep.other_errors;
    j["accuracy"] = format_sig4(rep.accuracy);
    j["accuracy_percent"] = format_percent(rep.accuracy);
    j["accuracy_numerator"] = rep.accuracy.num;
    j["accuracy_denominator"] = rep.accuracy.den;
    out << j.dump(2) << '\n';
  } else {
    out << "total: " << rep.total << '\n'
        << "correct: " << rep.correct << '\n'
        << "over-stemmed: " << rep.over_stemmed << '\n'
        << "under-stemmed: " << rep.under_stemmed << '\n'
        << "other: " << rep.other_errors << '\n'
        << "accuracy: " << format_percent(rep.accuracy) << '\n';
  }
  return finish_output(out, err);
}

int cmd_stats(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto policy = policy_or_report(config, err, code);
  if (!policy) return code;

  CorpusStatsBuilder builder;
  std::string line;
  std::size_t lineno = 0;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      for (const auto& word : tokenize(decode_line(line, lineno))) builder.add(word);
    }
  } catch (const Utf8Error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  if (in.bad()) {
    err << "error: read failed\n";
    return kIoError;
  }
  auto s = builder.finish(*policy);

  if (config.json) {
    nlohmann::ordered_json j;
    j["total_words"] = s.total_words;
    j["unique_words"] = s.unique_words;
    j["multi_member_groups"] = s.multi_member_groups;
    j["single_member_groups"] = s.single_member_groups;
    j["min_len"] = s.min_len;
    j["max_len"] = s.max_len;
    out << j.dump(2) << '\n';
  } else {
    out << "Total Words: " << s.total_words << '\n'
        << "Unique Words: " << s.unique_words << '\n'
        << "Stem Groups with more than one word: " << s.multi_member_groups << '\n'
        << "Stem Groups with only one word: " << s.single_member_groups << '\n'
        << "Min Length: " << s.min_len << '\n'
        << "Max Length: " << s.max_len << '\n';
  }
  return finish_output(out, err);
}

int cmd_lexicon_check(const std::string& lexicon_path, std::ostream& out, std::ostream& err) {
  try {
    auto lex = load_lexicon_file(lexicon_path);
    std::map<SuffixSource, std::size_t> per_source;
    for (const auto& e : lex.enumerate()) ++per_source[e.source];
    out << "entries: " << lex.size() << '\n'
        << "max suffix length: " << lex.max_suffix_len() << '\n';
    for (const auto& [source, n] : per_source) {
      out << "source " << to_string(source) << ": " << n << '\n';
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const LexiconError& e) {
    err << "error: " << lexicon_path << ": " << e.what() << '\n';
    return kDataError;
  }
  return finish_output(out, err);
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Longest-match suffix-stripping stemmer for Gujarati", "gujstem"};
  app.require_subcommand(1);

  RunConfig config;
  std::string gold_path;
  std::string check_path;

  std::string mode_name = "single";
  std::string guard_name = "base";
  app.add_option("--lexicon", config.lexicon_path, "Suffix lexicon file")
      ->capture_default_str();
  app.add_option("--mode", mode_name, "Stripping mode")
      ->check(CLI::IsMember({"single", "iterative"}))
      ->capture_default_str();
  app.add_option("--guard", guard_name, "Stem guard")
      ->check(CLI::IsMember({"base", "nonempty"}))
      ->capture_default_str();
  app.add_option("--output", config.output, "Output file (default stdout)");

  auto* stem_cmd = app.add_subcommand("stem", "Stem a text stream to word/stem/suffixes TSV");
  stem_cmd->add_option("input", config.input, "Input text file (default stdin)");
  stem_cmd->fallthrough();

  auto* eval_cmd = app.add_subcommand("eval", "Score the stemmer against a gold TSV file");
  eval_cmd->add_option("gold", gold_path, "Gold file: word<TAB>stem per line")->required();
  eval_cmd->add_flag("--json", config.json, "Emit JSON");
  eval_cmd->fallthrough();

  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics for a text stream");
  stats_cmd->add_option("input", config.input, "Input text file (default stdin)");
  stats_cmd->add_flag("--json", config.json, "Emit JSON");
  stats_cmd->fallthrough();

  auto* lex_cmd = app.add_subcommand("lexicon", "Lexicon maintenance");
  lex_cmd->require_subcommand(1);
  auto* check_cmd = lex_cmd->add_subcommand("check", "Validate a lexicon file");
  check_cmd->add_option("path", check_path, "Lexicon file (default: --lexicon)");
  check_cmd->fallthrough();
  lex_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDataError;
  }

  config.mode = mode_name == "iterative" ? StemMode::Iterative : StemMode::SinglePass;
  config.guard = guard_name == "nonempty" ? StemGuard::NonEmptyOnly : StemGuard::OrthographicBase;

  std::ofstream out_file;
  std::ostream* sink = &out;
  if (!config.output.empty() && config.output != "-") {
    out_file.open(config.output, std::ios::binary);
    if (!out_file) {
      err << "error: cannot open '" << config.output << "' for writing\n";
      return kIoError;
    }
    sink = &out_file;
  }

  auto with_input = [&](auto&& fn) -> int {
    if (config.input.empty() || config.input == "-") return fn(in);
    try {
      auto file = open_input(config.input);
      return fn(file);
    } catch (const IoError& e) {
      err << "error: " << e.what() << '\n';
      return kIoError;
    }
  };

  if (*stem_cmd) {
    return with_input([&](std::istream& src) { return cmd_stem(config, src, *sink, err); });
  }
  if (*stats_cmd) {
    return with_input([&](std::istream& src) { return cmd_stats(config, src, *sink, err); });
  }
  if (*eval_cmd) return cmd_eval(config, gold_path, *sink, err);
  if (*check_cmd) {
    return cmd_lexicon_check(check_path.empty() ? config.lexicon_path : check_path, *sink, err);
  }
  return kDataError;
}

}  // namespace gujstem::cli
