#include "perminv/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <ostream>

#include "perminv/decisions.hpp"
#include "perminv/error.hpp"
#include "perminv/perm_group.hpp"
#include "perminv/report_io.hpp"

namespace perminv {

std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(';', start);
    std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string::npos) out.push_back(std::move(piece));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::uint64_t> parse_characteristics(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(',', start);
    std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    const auto first = piece.find_first_not_of(" \t");
    const auto last = piece.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty entry in characteristic list");
    piece = piece.substr(first, last - first + 1);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw ParseError("characteristic \"" + piece + "\" is not a non-negative integer");
    }
    if (value != 0 && !is_prime(value)) {
      throw ParseError("characteristic " + piece + " is neither 0 nor prime");
    }
    out.push_back(value);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.n < 1) throw ParseError("--n must be at least 1");
    if (config.depth < 0) throw ParseError("--depth must be non-negative");
    if (config.characteristics.empty()) throw ParseError("no characteristics given");
    if (config.n > config.limits.max_n) {
      throw CapExceeded("arity " + std::to_string(config.n) + " exceeds cap " +
                            std::to_string(config.limits.max_n),
                        config.n);
    }

    std::vector<Permutation> gens;
    for (const auto& text : config.generators) gens.push_back(parse_cycles(text, config.n));
    std::vector<FieldChar> chars;
    for (auto p : config.characteristics) {
      if (p != 0 && !is_prime(p)) {
        throw ParseError("characteristic " + std::to_string(p) + " is neither 0 nor prime");
      }
      chars.emplace_back(p);
    }

    const PermGroup g = generate_group(gens, config.n, config.limits);
    const InvariantReport report = build_report(g, chars, config.depth, config.limits);
    out << (config.format == OutputFormat::json ? report_to_json(report) : report_to_text(report));
    return exit_code::ok;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::cap_exceeded;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::failure;
  }
}

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological invariants of rings of invariants of permutation groups"};
  CliConfig config;
  std::string gens_text;
  std::string chars_text = "0,2,3";
  std::string format_text = "text";

  app.add_option("--n", config.n, "Number of variables (points permuted)")->required();
  app.add_option("--gens", gens_text,
                 "Generators in cycle notation separated by ';', e.g. \"(1 2 3 4);(1 3)\"");
  app.add_option("--chars", chars_text, "Comma-separated characteristics, 0 for zero")
      ->capture_default_str();
  app.add_option("--depth", config.depth, "Cohomology window depth D")->capture_default_str();
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-order", config.limits.max_order, "Cap on |G|")->capture_default_str();
  app.add_option("--max-monomials", config.limits.max_monomials,
                 "Cap on the monomial basis size in one degree")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  }

  try {
    config.generators = split_generators(gens_text);
    config.characteristics = parse_characteristics(chars_text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  }
  config.format = format_text == "json" ? OutputFormat::json : OutputFormat::text;
  return run(config, out, err);
}

}  // namespace perminv
