#ifndef SEMABS_PRESENTATION_HPP
#define SEMABS_PRESENTATION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semabs/numeric.hpp"

namespace semabs {

// Ordered generating system. Aliases ("copies") are full symbols with their
// own coordinate; each one is glued to its original by a length-1 relation.
struct GeneratorSet {
  std::vector<std::string> symbols;                            // declaration order
  std::vector<std::pair<std::string, std::string>> copies;     // (alias, original)

  std::size_t size() const { return symbols.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const GeneratorSet& other) const = default;
};

// One defining relation lhs = rhs, both sides points of N_0^S.
struct RelationPair {
  Exponents lhs;
  Exponents rhs;

  bool operator==(const RelationPair& other) const = default;
};

enum class SemigroupClass { Group, Cancellative, General, Auto };

std::string to_string(SemigroupClass c);
SemigroupClass semigroup_class_from_string(const std::string& s);

// A finitely presented commutative monoid with a chosen generating system.
struct Presentation {
  std::string name;
  GeneratorSet generators;
  std::vector<RelationPair> relations;
  SemigroupClass declared_class = SemigroupClass::Auto;
  bool has_identity = false;  // set by normalize(); the identity is always adjoined

  bool operator==(const Presentation& other) const;
};

// Reads the .sgp text format:
//
//   semigroup <name>            (optional)
//   generators: a b c
//   copies: a' = a              (optional)
//   relations: a + b = 0 ; 2c = a
//   class: group                (optional; default auto)
//
// '#' starts a comment; empty side is written '0'; coefficients may be
// written '2a' or '2*a'. Aliases expand to relations alias = original.
Presentation parse_presentation(std::string_view text);

// Canonicalization: identity adjoined, alias relations present, duplicate and
// trivial relations dropped. Idempotent.
Presentation normalize(const Presentation& p);

// lhs - rhs as a vector of Z^S.
IntVec relation_difference(const RelationPair& r);

// Emits the .sgp format; parse_presentation(serialize(p)) == p for normalized p.
std::string serialize(const Presentation& p);

// Renders an exponent vector as a relation side, e.g. "2a + b" or "0".
std::string render_side(const Exponents& v, const GeneratorSet& gens);

}  // namespace semabs

#endif
