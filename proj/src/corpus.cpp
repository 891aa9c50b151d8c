#include "pillowcase/corpus.hpp"

#include "pillowcase/io.hpp"
#include "pillowcase/pairing.hpp"

namespace pillowcase {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"lnat", "modules/lnat.mod", std::nullopt},
      {"lnat-curve", "curves/lnat.curve", std::nullopt},
      {"belt", "modules/belt.mod", std::nullopt},
      {"belt-curve", "curves/belt.curve", std::nullopt},
      {"unknot", "curves/unknot.curve", 1},
      {"trefoil", "modules/t23.mod", 3},
      {"t34", "sums/t34.sum", 5},
      {"t37", "sums/t37.sum", 9},
      {"t511", "sums/t511.sum", 17},
      {"r0", "modules/r0.mod", 1},
      {"r1", "modules/r1.mod", 4},
      {"r4", "modules/r4.mod", 4},
  };
  return entries;
}

std::vector<CorpusResult> runCorpus(const std::filesystem::path& dataDir) {
  RightModule lnat = parseModule(readTextFile(dataDir / "modules/lnat.mod"));
  std::vector<CorpusResult> results;
  for (const CorpusEntry& entry : corpus()) {
    CorpusResult r;
    r.name = entry.name;
    r.expected = entry.rankAgainstLnat;
    RightModule m = loadInput(dataDir / entry.path);
    r.generators = m.genCount();
    r.actions = static_cast<int>(m.actions.size());
    auto report = validateAinfty(m, 8);
    r.valid = report.ok();
    if (!r.valid) {
      const auto& issue = report.structural.empty() ? report.relation.front()
                                                    : report.structural.front();
      r.detail = issue.where + ": " + issue.detail;
    } else if (entry.rankAgainstLnat) {
      r.rank = pairRank(m, lnat);
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace pillowcase
