#pragma once

#include <string>
#include <variant>
#include <vector>

#include "girthlab/amalgam.hpp"
#include "girthlab/hnn.hpp"
#include "girthlab/oracles.hpp"
#include "girthlab/words.hpp"

namespace girthlab {

// Ambient group plus generator words over its alphabet; resolve with
// make_subgroup when membership is needed.
struct SubgroupSpec {
  GroupOracle ambient;
  std::vector<Word> gens;
};

using ParsedSpec =
    std::variant<GroupOracle, SubgroupSpec, HnnExtension, AmalgamPresentation>;

// Reads one spec. Keys may appear in any order, each at most once.
//
//   group    := free rank=N | free-abelian rank=N | dihedral q=(N|inf)
//             | cyclic n=N | corpus name=IDENT
//   subgroup := subgroup of=(group) gens="w1; w2; ..."
//   hnn      := hnn base=(group) A=(subgroup gens="...")
//                   B=(subgroup gens="...") phi="u -> v, ..." [stable=IDENT]
//   amalgam  := amalgam left=(group) right=(group)
//                   C_left=(subgroup gens="...") C_right=(subgroup gens="...")
//                   iso="u -> v, ..."
//
// Words use the owning group's alphabet ("b a^-1 b^2"); lists separate words
// with ';'. phi sends each declared generator of A to a word over the base;
// iso sends each declared generator of C_left to a word over the right
// factor. Map keys match by element, not by spelling. ParseError carries
// line, column and the expected token; group-theoretic failures (phi image
// outside B, a core that does not embed) surface as the constructors' own
// errors.
ParsedSpec parse_spec(const std::string& text);

// "w1; w2; ..." over a. Empty text gives an empty list; a blank entry
// between separators is a ParseError.
std::vector<Word> parse_words(const Alphabet& a, const std::string& list);

// "left w | right w | ...": product of factor syllables, normalized. Each
// syllable names its factor and gives a word over that factor's alphabet.
AmalgamElement parse_amalgam_element(const AmalgamPresentation& p,
                                     const std::string& text);

// One line naming the parsed object, for manifests and logs.
std::string describe(const ParsedSpec& spec);

// "proper" | "semi-proper" | "full"
const char* hnn_class_name(HnnClass c);

}  // namespace girthlab
