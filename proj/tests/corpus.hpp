#pragma once

#include <string>
#include <vector>

#include "perminv/perm_group.hpp"
#include "perminv/permutation.hpp"

namespace perminv::testing {

struct CorpusEntry {
  std::string name;
  std::size_t n;
  std::vector<std::string> generators;
};

inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"trivial", 3, {}},
      {"<(1 2)> in S3", 3, {"(1 2)"}},
      {"S2", 2, {"(1 2)"}},
      {"A3", 3, {"(1 2 3)"}},
      {"S3", 3, {"(1 2)", "(1 2 3)"}},
      {"C4", 4, {"(1 2 3 4)"}},
      {"<(1 2)(3 4)>", 4, {"(1 2)(3 4)"}},
      {"S2xS2", 4, {"(1 2)", "(3 4)"}},
      {"A4", 4, {"(1 2 3)", "(2 3 4)"}},
      {"S4", 4, {"(1 2)", "(1 2 3 4)"}},
      {"D4", 4, {"(1 2 3 4)", "(1 3)"}},
      {"<(1 2)(3 4)(5 6)>", 6, {"(1 2)(3 4)(5 6)"}},
      {"S5", 5, {"(1 2)", "(1 2 3 4 5)"}},
      {"A5", 5, {"(1 2 3)", "(1 2 3 4 5)"}},
      {"S2xS3", 5, {"(1 2)", "(3 4)", "(3 4 5)"}},
  };
  return entries;
}

inline PermGroup make_group(std::size_t n, const std::vector<std::string>& gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_cycles(g, n));
  return generate_group(perms, n);
}

inline PermGroup make_group(const CorpusEntry& e) { return make_group(e.n, e.generators); }

inline PermGroup corpus_group(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return make_group(e);
  }
  throw std::out_of_range("no corpus group " + name);
}

}  // namespace perminv::testing
