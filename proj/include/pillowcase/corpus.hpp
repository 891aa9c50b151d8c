#pragma once

// The shipped example corpus: every fixture under data/, and for the
// entries whose pairing rank against lnat is on record, that rank.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pillowcase/modules.hpp"

namespace pillowcase {

struct CorpusEntry {
  std::string name;
  std::string path;                   // relative to the data directory
  std::optional<int> rankAgainstLnat; // recorded homology rank, if any
};

const std::vector<CorpusEntry>& corpus();

struct CorpusResult {
  std::string name;
  int generators = 0;
  int actions = 0;
  bool valid = false;
  std::optional<int> rank;      // computed when an expected rank is recorded
  std::optional<int> expected;
  std::string detail;           // first validation issue, when invalid

  bool ok() const { return valid && rank == expected; }
};

// Loads every entry, validates it, and checks the recorded ranks
// against pairings with the lnat module fixture.
std::vector<CorpusResult> runCorpus(const std::filesystem::path& dataDir);

}  // namespace pillowcase
