#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pillowcase/bar.hpp"
#include "pillowcase/corpus.hpp"
#include "pillowcase/io.hpp"
#include "pillowcase/pairing.hpp"
#include "pillowcase/selfcheck.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pillowcase;

// exit codes: 0 success, 1 failed check, 2 unusable input
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Output {
  bool json = false;

  void summary(const std::vector<std::pair<std::string, ordered_json>>& fields) const {
    if (json) {
      ordered_json record{{"kind", "summary"}};
      for (const auto& [key, value] : fields) record[key] = value;
      std::cout << record << "\n";
    } else {
      for (const auto& [key, value] : fields)
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
    }
  }

  void line(const std::string& kind, const std::string& text) const {
    if (json)
      std::cout << ordered_json{{"kind", kind}, {"value", text}} << "\n";
    else
      std::cout << text << "\n";
  }

  // returns ok so call sites can accumulate
  bool check(const CertifyCheck& c) const {
    if (json) {
      ordered_json record{{"kind", "check"}, {"name", c.what}, {"ok", c.ok}};
      if (!c.ok) record["detail"] = c.detail;
      std::cout << record << "\n";
    } else if (c.ok) {
      std::cout << "pass: " << c.what << "\n";
    } else {
      std::cout << "FAIL: " << c.what << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
    }
    return c.ok;
  }
};

bool reportChecks(const Output& out, const std::vector<CertifyCheck>& checks) {
  bool ok = true;
  for (const CertifyCheck& c : checks) ok &= out.check(c);
  return ok;
}

// A failed semantic check; distinct from unusable input, which throws
// runtime_error.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Loads an input and insists it satisfies the module relation.
RightModule loadValidated(const std::filesystem::path& path, int maxArity) {
  RightModule m = loadInput(path);
  auto report = validateAinfty(m, maxArity);
  if (!report.ok()) {
    std::string message = path.string() + " fails validation:";
    for (const auto& issue : report.structural)
      message += "\n  " + issue.where + ": " + issue.detail;
    for (const auto& issue : report.relation) message += "\n  " + issue.where + ": " + issue.detail;
    throw CheckFailure(message);
  }
  return m;
}

void printValidation(const Output& out, const ValidationReport& report) {
  for (const auto& issue : report.structural)
    out.check({issue.where + " -- " + issue.detail, false, ""});
  for (const auto& issue : report.relation)
    out.check({issue.where + " -- " + issue.detail, false, ""});
}

int cmdCompile(const Output& out, const std::string& inPath, const std::string& outPath) {
  CurveWord word = normalize(parseWord(readTextFile(inPath)));
  RightModule m = compileCurve(word);
  std::string text = serializeModule(m);
  if (outPath == "-") {
    std::cout << text;
    return 0;
  }
  out.summary({{"generators", m.genCount()}, {"actions", m.actions.size()}});
  if (!outPath.empty()) {
    std::ofstream file(outPath);
    if (!file) throw std::runtime_error("cannot write " + outPath);
    file << text;
  }
  return 0;
}

int cmdPair(const Output& out, const std::string& path1, const std::string& path0, bool dump,
            bool periodic, bool fullBar) {
  RightModule m1 = loadValidated(path1, 8);
  RightModule m0 = loadValidated(path0, 8);
  DDStructure dd = fullBar ? buildBar() : builtinBarR();
  PairingComplex complex = buildPairing(m1, dd, dualize(m0));
  int rank = complex.homology();
  std::vector<std::pair<std::string, ordered_json>> fields = {
      {"generators", complex.genCount()},
      {"arrows", complex.arrows.size()},
      {"rank", rank},
  };
  if (periodic) {
    if (rank < 2)
      throw std::runtime_error("intersection number would be negative; the pairing rank is " +
                               std::to_string(rank) + ", so the curves cannot be periodic");
    fields.emplace_back("intersection", rank - 2);
  }
  out.summary(fields);
  if (dump) {
    for (const std::string& name : complex.genNames) out.line("generator", name);
    for (const auto& [src, tgt] : complex.arrows)
      out.line("arrow", complex.genNames[src] + " -> " + complex.genNames[tgt]);
  }
  return 0;
}

int cmdRank(const Output& out, const std::string& path1, const std::string& path0, bool fullBar) {
  RightModule m1 = loadValidated(path1, 8);
  RightModule m0 = loadValidated(path0, 8);
  int rank = fullBar ? pairRank(m1, buildBar(), m0) : pairRank(m1, m0);
  out.summary({{"rank", rank}});
  return 0;
}

int cmdValidate(const Output& out, const std::string& path, int maxArity) {
  RightModule m = loadInput(path);
  auto report = validateAinfty(m, maxArity);
  out.summary({{"generators", m.genCount()},
               {"actions", m.actions.size()},
               {"issues", report.structural.size() + report.relation.size()}});
  printValidation(out, report);
  return report.ok() ? 0 : kCheckFailed;
}

DDStructure loadFixtureDD(const std::filesystem::path& dataDir, const char* file) {
  return parseDD(readTextFile(dataDir / "dd" / file));
}

int cmdBarCertify(const Output& out, const std::filesystem::path& dataDir) {
  CertifyReport report =
      certifyBar(loadFixtureDD(dataDir, "bar56.dd"), loadFixtureDD(dataDir, "barr24.dd"));
  return reportChecks(out, report.checks) ? 0 : kCheckFailed;
}

int cmdCorpus(const Output& out, const std::filesystem::path& dataDir) {
  bool ok = true;
  for (const CorpusResult& r : runCorpus(dataDir)) {
    ok &= r.ok();
    if (out.json) {
      ordered_json record{{"kind", "entry"},
                          {"name", r.name},
                          {"generators", r.generators},
                          {"actions", r.actions},
                          {"valid", r.valid}};
      if (r.rank) record["rank"] = *r.rank;
      if (r.expected) record["expected"] = *r.expected;
      if (!r.detail.empty()) record["detail"] = r.detail;
      record["ok"] = r.ok();
      std::cout << record << "\n";
    } else {
      std::cout << (r.ok() ? "pass: " : "FAIL: ") << r.name << " (" << r.generators
                << " generators, " << r.actions << " actions)";
      if (r.expected)
        std::cout << " rank " << (r.rank ? std::to_string(*r.rank) : std::string("?"))
                  << " expected " << *r.expected;
      if (!r.detail.empty()) std::cout << " -- " << r.detail;
      std::cout << "\n";
    }
  }
  return ok ? 0 : kCheckFailed;
}

int cmdSelfTest(const Output& out, const std::filesystem::path& dataDir) {
  bool ok = reportChecks(out, checkAlgebra());

  CertifyReport bar =
      certifyBar(loadFixtureDD(dataDir, "bar56.dd"), loadFixtureDD(dataDir, "barr24.dd"));
  ok &= reportChecks(out, bar.checks);
  ok &= reportChecks(out, checkMixedChains(builtinBarR(), 5));

  RightModule lnat = parseModule(readTextFile(dataDir / "modules/lnat.mod"));
  auto shape = [&](const char* name, const std::filesystem::path& path, int generators,
                   int arrows) {
    PairingComplex complex = buildPairing(loadInput(path), dualize(lnat));
    bool good = complex.genCount() == generators &&
                static_cast<int>(complex.arrows.size()) == arrows;
    ok &= out.check({std::string(name) + " pairing has " + std::to_string(generators) +
                         " generators and " + std::to_string(arrows) + " arrows",
                     good,
                     std::to_string(complex.genCount()) + " generators, " +
                         std::to_string(complex.arrows.size()) + " arrows"});
  };
  shape("unknot", dataDir / "curves/unknot.curve", 13, 12);
  shape("trefoil", dataDir / "modules/t23.mod", 15, 10);

  if (cmdCorpus(out, dataDir) != 0) ok = false;
  return ok ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pillowcase: immersed-curve modules and their algebraic pairings"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --data / --format after the subcommand name

  std::string dataDir = "data";
  std::string format = "text";
  app.add_option("--data", dataDir, "data directory with the shipped fixtures")
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();

  std::string inPath, inPath0, outPath;
  bool dump = false, periodic = false, fullBar = false;
  int maxArity = 8;
  uint64_t seed = 0;
  bool seeded = false;

  auto* compile = app.add_subcommand("compile-curve", "compile a curve word into a module file");
  compile->add_option("input", inPath, "curve file")->required();
  compile->add_option("-o,--output", outPath, "write the module here ('-' for stdout)");

  auto* pair = app.add_subcommand("pair", "build and measure a pairing complex");
  pair->add_option("input1", inPath, "module side: curve, module or sum file")->required();
  pair->add_option("input0", inPath0, "dualized side: curve, module or sum file")->required();
  pair->add_flag("--dump", dump, "also list the complex's generators and arrows");
  pair->add_flag("--periodic", periodic, "derive the intersection number of periodic curves");
  pair->add_flag("--full-bar", fullBar, "pair against the unreduced 56-generator structure");

  auto* rank = app.add_subcommand("rank", "homology rank of a pairing");
  rank->add_option("input1", inPath)->required();
  rank->add_option("input0", inPath0)->required();
  rank->add_flag("--full-bar", fullBar);

  auto* validate = app.add_subcommand("validate-module", "structural and relation checks");
  validate->add_option("input", inPath)->required();
  validate->add_option("--max-arity", maxArity, "longest input sequence checked")
      ->capture_default_str();

  auto* bar = app.add_subcommand("bar", "the dual bar structure");
  bar->require_subcommand(1);
  auto* barBuild = bar->add_subcommand("build", "print the full 56-generator structure");
  auto* barReduce = bar->add_subcommand("reduce", "cancel a structure down to a reduced model");
  barReduce->add_option("input", inPath, "DD file (default: the built bar)");
  auto* seedOpt = barReduce->add_option("--seed", seed, "randomize the cancellation order");
  auto* barCertify = bar->add_subcommand("certify", "cross-check against the recorded tables");

  auto* selftest = app.add_subcommand("selftest", "run every shipped consistency check");

  auto* corpusCmd = app.add_subcommand("corpus", "the example corpus");
  corpusCmd->require_subcommand(1);
  auto* corpusRun = corpusCmd->add_subcommand("run", "validate entries and check recorded ranks");

  CLI11_PARSE(app, argc, argv);
  seeded = seedOpt->count() > 0;

  Output out{format == "json-lines"};
  try {
    if (compile->parsed()) return cmdCompile(out, inPath, outPath);
    if (pair->parsed()) return cmdPair(out, inPath, inPath0, dump, periodic, fullBar);
    if (rank->parsed()) return cmdRank(out, inPath, inPath0, fullBar);
    if (validate->parsed()) return cmdValidate(out, inPath, maxArity);
    if (barBuild->parsed()) {
      std::cout << serializeDD(buildBar());
      return 0;
    }
    if (barReduce->parsed()) {
      DDStructure d = inPath.empty() ? buildBar() : parseDD(readTextFile(inPath));
      std::cout << serializeDD(seeded ? reduceDD(d, seed) : reduceDD(d));
      return 0;
    }
    if (barCertify->parsed()) return cmdBarCertify(out, dataDir);
    if (selftest->parsed()) return cmdSelfTest(out, dataDir);
    if (corpusRun->parsed()) return cmdCorpus(out, dataDir);
  } catch (const CheckFailure& e) {
    std::cerr << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
