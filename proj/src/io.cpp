#include "pillowcase/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pillowcase {

namespace {

[[noreturn]] void fail(int lineNo, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(lineNo) + ": " + msg);
}

std::vector<std::pair<int, std::vector<std::string>>> tokenizedLines(const std::string& text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream lines(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(lines, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (words >> tok) tokens.push_back(tok);
    if (!tokens.empty()) out.emplace_back(lineNo, std::move(tokens));
  }
  return out;
}

}  // namespace

RightModule parseModule(const std::string& text) {
  RightModule m;
  for (const auto& [lineNo, tokens] : tokenizedLines(text)) {
    if (tokens[0] == "gen") {
      if (tokens.size() != 3) fail(lineNo, "expected 'gen <name> <idempotent>'");
      auto idem = idemFromName(tokens[2]);
      if (!idem) fail(lineNo, "unknown idempotent '" + tokens[2] + "'");
      if (m.findGenerator(tokens[1])) fail(lineNo, "duplicate generator '" + tokens[1] + "'");
      m.addGenerator(tokens[1], *idem);
    } else if (tokens[0] == "act") {
      // act <src> | <elem> ... -> <tgt>
      if (tokens.size() < 5 || tokens[2] != "|" || tokens[tokens.size() - 2] != "->")
        fail(lineNo, "expected 'act <src> | <elems> -> <tgt>'");
      auto src = m.findGenerator(tokens[1]);
      if (!src) fail(lineNo, "unknown generator '" + tokens[1] + "'");
      auto tgt = m.findGenerator(tokens.back());
      if (!tgt) fail(lineNo, "unknown generator '" + tokens.back() + "'");
      std::vector<Basis> inputs;
      for (size_t k = 3; k + 2 < tokens.size(); ++k) {
        auto b = basisFromName(tokens[k]);
        if (!b) fail(lineNo, "unknown algebra element '" + tokens[k] + "'");
        inputs.push_back(*b);
      }
      m.toggleAction({*src, std::move(inputs), *tgt});
    } else {
      fail(lineNo, "expected 'gen' or 'act', got '" + tokens[0] + "'");
    }
  }
  return m;
}

std::string serializeModule(const RightModule& m) {
  std::string out;
  for (int g = 0; g < m.genCount(); ++g)
    out += "gen " + m.genNames[g] + " " + std::string(name(m.genIdems[g])) + "\n";
  for (const Action& a : m.actions) out += "act " + actionToString(m, a) + "\n";
  return out;
}

DDStructure parseDD(const std::string& text) {
  DDStructure d;
  for (const auto& [lineNo, tokens] : tokenizedLines(text)) {
    if (tokens[0] == "gen") {
      if (tokens.size() != 4) fail(lineNo, "expected 'gen <name> <leftIdem> <rightIdem>'");
      auto l = idemFromName(tokens[2]);
      auto r = idemFromName(tokens[3]);
      if (!l || !r) fail(lineNo, "unknown idempotent");
      if (d.findGenerator(tokens[1])) fail(lineNo, "duplicate generator '" + tokens[1] + "'");
      d.addGenerator(tokens[1], *l, *r);
    } else {
      // <src> | <left> ; <right> -> <tgt>
      if (tokens.size() != 7 || tokens[1] != "|" || tokens[3] != ";" || tokens[5] != "->")
        fail(lineNo, "expected '<src> | <left> ; <right> -> <tgt>'");
      auto src = d.findGenerator(tokens[0]);
      if (!src) fail(lineNo, "unknown generator '" + tokens[0] + "'");
      auto tgt = d.findGenerator(tokens[6]);
      if (!tgt) fail(lineNo, "unknown generator '" + tokens[6] + "'");
      auto coeff = [&](const std::string& tok, Idem identityAt) -> Basis {
        if (tok == "1") return idemBasis(identityAt);
        auto b = basisFromName(tok);
        if (!b) fail(lineNo, "unknown algebra element '" + tok + "'");
        return *b;
      };
      Basis left = coeff(tokens[2], d.genIdems[*src].first);
      Basis right = coeff(tokens[4], d.genIdems[*src].second);
      d.toggleArrow({*src, left, *tgt, right});
    }
  }
  return d;
}

std::string serializeDD(const DDStructure& d) {
  std::string out;
  for (int g = 0; g < d.genCount(); ++g)
    out += "gen " + d.genNames[g] + " " + std::string(name(d.genIdems[g].first)) + " " +
           std::string(name(d.genIdems[g].second)) + "\n";
  for (const DDArrow& a : d.arrows) out += arrowToString(d, a) + "\n";
  return out;
}

std::string readTextFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

enum class InputKind { Curve, Module, Sum };

InputKind sniffKind(const std::filesystem::path& path, const std::string& text) {
  auto ext = path.extension().string();
  if (ext == ".curve") return InputKind::Curve;
  if (ext == ".mod") return InputKind::Module;
  if (ext == ".sum") return InputKind::Sum;
  auto lines = tokenizedLines(text);
  if (!lines.empty()) {
    const std::string& first = lines.front().second.front();
    if (first == "cyclic:" || first == "linear:") return InputKind::Curve;
    if (first == "sum:") return InputKind::Sum;
    if (first == "gen" || first == "act") return InputKind::Module;
  }
  throw std::runtime_error("cannot tell what kind of input " + path.string() + " is");
}

}  // namespace

RightModule loadInput(const std::filesystem::path& path) {
  std::string text = readTextFile(path);
  switch (sniffKind(path, text)) {
    case InputKind::Curve: return compileCurve(normalize(parseWord(text)));
    case InputKind::Module: return parseModule(text);
    case InputKind::Sum: {
      auto lines = tokenizedLines(text);
      if (lines.empty() || lines.front().second != std::vector<std::string>{"sum:"})
        throw std::runtime_error(path.string() + ": manifest must start with 'sum:'");
      std::vector<RightModule> parts;
      for (size_t k = 1; k < lines.size(); ++k) {
        if (lines[k].second.size() != 1)
          fail(lines[k].first, "expected one file path per manifest line");
        parts.push_back(loadInput(path.parent_path() / lines[k].second[0]));
      }
      if (parts.empty()) throw std::runtime_error(path.string() + ": empty manifest");
      return directSum(parts);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace pillowcase
