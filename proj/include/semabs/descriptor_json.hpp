#ifndef SEMABS_DESCRIPTOR_JSON_HPP
#define SEMABS_DESCRIPTOR_JSON_HPP

#include <string>
#include <vector>

#include "semabs/absolute.hpp"

namespace semabs {

// Flat, serialization-ready mirror of AbsoluteDescriptor. Field names are
// part of the output contract and must stay stable; rationals travel as
// canonical "p/q" text so nothing is lost to rounding.
struct DescriptorDocument {
  struct Equation {
    std::vector<int> lhs;
    std::vector<int> rhs;
    bool operator==(const Equation&) const = default;
  };
  struct Facet {
    std::vector<long long> normal;
    std::string offset;
    bool operator==(const Facet&) const = default;
  };
  struct StratumEntry {
    std::vector<std::string> support;  // generator names, ascending
    int dimension = 0;
    std::vector<std::vector<long long>> lattice;
    std::vector<std::string> sample;
    bool exact = true;
    bool operator==(const StratumEntry&) const = default;
  };

  std::vector<std::string> generators;
  std::string semigroup_class;  // serialized under the key "class"
  std::vector<std::vector<long long>> reduced_relation_lattice;
  std::vector<std::vector<long long>> central_lattice;
  int absolute_dimension = 0;
  std::vector<Equation> equations;
  std::vector<std::vector<long long>> chart_complement_basis;
  std::vector<std::vector<std::string>> polytope_vertices;  // one per generator
  std::vector<Facet> polytope_facets;
  std::vector<StratumEntry> strata;
  std::string topology_claim;
  bool exact = false;

  bool operator==(const DescriptorDocument&) const = default;
};

DescriptorDocument document_from(const AbsoluteDescriptor& d);

// Pretty-printed JSON, trailing newline included.
std::string write_document(const DescriptorDocument& doc);
std::string write_descriptor(const AbsoluteDescriptor& d);

// Inverse of write_document; malformed or incomplete input -> ParseError.
DescriptorDocument read_document(const std::string& text);

}  // namespace semabs

#endif
