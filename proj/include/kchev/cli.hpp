#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kchev/render.hpp"

namespace kchev {

enum class OutputFormat { kText, kJson, kLatex };

struct RunConfig {
  std::string subcommand;  // expand | bott-samelson | table | verify
  std::string type;        // named Cartan type, empty when matrix given
  std::string matrix_json;
  std::vector<int> word;                   // 1-based indices as supplied
  std::vector<std::vector<Int>> weights;   // raw coordinate lists
  bool root_coords_input = false;
  WeightDisplay display = WeightDisplay::kFundamental;
  OutputFormat format = OutputFormat::kText;
  bool verify = false;
  bool ordinary = false;
  bool auto_reduce = false;
  bool validate_json = false;
  int max_word_length = kDefaultMaxWordLength;
  std::size_t max_group = kDefaultGroupCap;
  std::size_t max_reduced_words = kDefaultReducedWordCap;
  std::string output_path;  // empty = stdout
  std::string help_text;    // non-empty: print it and exit 0
};

// Parses argv (without the program name); throws UsageError on bad input.
// Cap defaults honor the KCHEV_MAX_N / KCHEV_MAX_GROUP / KCHEV_MAX_WORDS
// environment variables.
RunConfig parse_args(const std::vector<std::string>& args);

// Executes a parsed config, writing rendered output to `out`. Returns 0 on
// success, 1 when a requested verification fails. Input errors are thrown.
int run(const RunConfig& config, std::ostream& out);

// Full entry point: parse, run, map errors to exit codes (2 for usage and
// input errors).
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace kchev
