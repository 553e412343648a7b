#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "perminv/limits.hpp"

namespace perminv {

enum class OutputFormat { text, json };

struct CliConfig {
  std::size_t n = 0;
  std::vector<std::string> generators;     // cycle notation, one per generator
  std::vector<std::uint64_t> characteristics{0, 2, 3};
  int depth = 10;
  OutputFormat format = OutputFormat::text;
  Limits limits;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int parse_error = 2;
inline constexpr int cap_exceeded = 3;
inline constexpr int internal_error = 4;
}  // namespace exit_code

/// Splits "--gens" text on ';' into cycle strings; blank pieces are dropped.
std::vector<std::string> split_generators(const std::string& text);

/// Parses "0,2,3" into sorted, deduplicated characteristics. Throws
/// ParseError on non-numbers or values that are neither 0 nor prime.
std::vector<std::uint64_t> parse_characteristics(const std::string& text);

/// Builds the group, the report and writes it to out. Diagnostics go to
/// err. Returns one of the exit_code values.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace perminv
