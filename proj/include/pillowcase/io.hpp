#pragma once

// Text formats.
//
// Module files:   gen <name> <idempotent>
//                 act <src> | <elem> <elem> ... -> <tgt>
// DD files:       gen <name> <leftIdem> <rightIdem>
//                 <src> | <leftCoeff> ; <rightCoeff> -> <tgt>     ('1' = identity)
// Curve files:    cyclic:|linear: followed by the token word
// Sum manifests:  sum:  then one module/curve file path per line
//
// '#' starts a comment anywhere; names must be '#'- and space-free.
// Dual-path generator names accept both spellings b(-xi1) and b(xi1').

#include <filesystem>
#include <string>

#include "pillowcase/curves.hpp"
#include "pillowcase/modules.hpp"

namespace pillowcase {

RightModule parseModule(const std::string& text);
std::string serializeModule(const RightModule& m);

DDStructure parseDD(const std::string& text);
std::string serializeDD(const DDStructure& d);

std::string readTextFile(const std::filesystem::path& path);

// Kind sniffing for CLI inputs: .curve/.mod/.sum extensions, otherwise
// the first token of the content ("cyclic:"/"linear:", "sum:", "gen").
// Curves are parsed, normalized and compiled; manifests load and
// direct-sum their entries (paths relative to the manifest).
RightModule loadInput(const std::filesystem::path& path);

}  // namespace pillowcase
