#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "gujstem/stemmer.hpp"

namespace gujstem::cli {

/// Process exit codes. Nothing else is ever returned.
enum ExitCode : int { kOk = 0, kIoError = 1, kDataError = 2 };

struct RunConfig {
  std::string lexicon_path = "data/gujarati_suffixes.txt";
  StemMode mode = StemMode::SinglePass;
  StemGuard guard = StemGuard::OrthographicBase;
  bool json = false;
  /// Empty or "-" means stdin / stdout.
  std::string input;
  std::string output;
};

/// I/O failure (open, read, write); maps to exit code 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resolves the lexicon path (cwd first, then the bundled data directory for
/// the default path) and loads it. Throws IoError or LexiconError.
SuffixLexicon load_lexicon_file(const std::string& path);

// The command functions write results to `out` and diagnostics to `err`,
// and return an ExitCode.
int cmd_stem(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& config, const std::string& gold_path, std::ostream& out,
             std::ostream& err);
int cmd_stats(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_lexicon_check(const std::string& lexicon_path, std::ostream& out, std::ostream& err);

/// Full command-line entry point (argument parsing + file handling).
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gujstem::cli
