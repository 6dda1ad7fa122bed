#include "semabs/descriptor_json.hpp"

#include <json.hpp>
#include <limits>
#include <utility>

namespace semabs {

namespace {

using Json = nlohmann::ordered_json;

long long to_int64(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw Error("lattice entry exceeds the 64-bit range of the JSON export");
  return v.convert_to<long long>();
}

std::vector<std::vector<long long>> int64_matrix(const IntMat& m) {
  std::vector<std::vector<long long>> out;
  out.reserve(m.size());
  for (const IntVec& row : m) {
    std::vector<long long> r;
    r.reserve(row.size());
    for (const Int& x : row) r.push_back(to_int64(x));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> rational_strings(const RatVec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rat& x : v) out.push_back(format_rational(x));
  return out;
}

}  // namespace

DescriptorDocument document_from(const AbsoluteDescriptor& d) {
  DescriptorDocument doc;
  doc.generators = d.presentation.generators.symbols;
  doc.semigroup_class = to_string(d.presentation.declared_class);
  doc.reduced_relation_lattice = int64_matrix(d.relation_lattice.basis);
  doc.central_lattice = int64_matrix(d.central_lattice.basis);
  doc.absolute_dimension = d.dimension;
  for (const CentralityEquation& eq : d.equations)
    doc.equations.push_back({eq.pair.lhs, eq.pair.rhs});
  doc.chart_complement_basis = int64_matrix(d.chart_basis.complement_basis);
  for (const RatVec& image : d.polytope.vertex_images)
    doc.polytope_vertices.push_back(rational_strings(image));
  for (const FacetInequality& f : d.polytope.facets) {
    DescriptorDocument::Facet facet;
    for (const Int& x : f.normal) facet.normal.push_back(to_int64(x));
    facet.offset = format_rational(f.offset);
    doc.polytope_facets.push_back(std::move(facet));
  }
  for (const Stratum& st : d.strata) {
    DescriptorDocument::StratumEntry entry;
    for (std::size_t s : st.support)
      entry.support.push_back(d.presentation.generators.symbols.at(s));
    entry.dimension = st.dimension;
    entry.lattice = int64_matrix(st.lattice.basis);
    entry.sample = rational_strings(st.sample.exact);
    entry.exact = d.exact;
    doc.strata.push_back(std::move(entry));
  }
  doc.topology_claim = to_string(d.topology);
  doc.exact = d.exact;
  return doc;
}

std::string write_document(const DescriptorDocument& doc) {
  Json j;
  j["generators"] = doc.generators;
  j["class"] = doc.semigroup_class;
  j["reduced_relation_lattice"] = doc.reduced_relation_lattice;
  j["central_lattice"] = doc.central_lattice;
  j["absolute_dimension"] = doc.absolute_dimension;
  j["equations"] = Json::array();
  for (const auto& eq : doc.equations)
    j["equations"].push_back({{"lhs", eq.lhs}, {"rhs", eq.rhs}});
  j["chart"] = {{"complement_basis", doc.chart_complement_basis}};
  j["polytope"] = {{"vertices", doc.polytope_vertices}, {"facets", Json::array()}};
  for (const auto& f : doc.polytope_facets)
    j["polytope"]["facets"].push_back({{"normal", f.normal}, {"offset", f.offset}});
  j["strata"] = Json::array();
  for (const auto& st : doc.strata)
    j["strata"].push_back({{"support", st.support},
                           {"dimension", st.dimension},
                           {"lattice", st.lattice},
                           {"sample", st.sample},
                           {"exact", st.exact}});
  j["topology_claim"] = doc.topology_claim;
  j["exact"] = doc.exact;
  return j.dump(2) + "\n";
}

std::string write_descriptor(const AbsoluteDescriptor& d) {
  return write_document(document_from(d));
}

DescriptorDocument read_document(const std::string& text) {
  try {
    Json j = Json::parse(text);
    DescriptorDocument doc;
    doc.generators = j.at("generators").get<std::vector<std::string>>();
    doc.semigroup_class = j.at("class").get<std::string>();
    doc.reduced_relation_lattice =
        j.at("reduced_relation_lattice").get<std::vector<std::vector<long long>>>();
    doc.central_lattice = j.at("central_lattice").get<std::vector<std::vector<long long>>>();
    doc.absolute_dimension = j.at("absolute_dimension").get<int>();
    for (const Json& eq : j.at("equations")) {
      DescriptorDocument::Equation e;
      e.lhs = eq.at("lhs").get<std::vector<int>>();
      e.rhs = eq.at("rhs").get<std::vector<int>>();
      doc.equations.push_back(std::move(e));
    }
    doc.chart_complement_basis =
        j.at("chart").at("complement_basis").get<std::vector<std::vector<long long>>>();
    doc.polytope_vertices =
        j.at("polytope").at("vertices").get<std::vector<std::vector<std::string>>>();
    for (const Json& f : j.at("polytope").at("facets")) {
      DescriptorDocument::Facet facet;
      facet.normal = f.at("normal").get<std::vector<long long>>();
      facet.offset = f.at("offset").get<std::string>();
      doc.polytope_facets.push_back(std::move(facet));
    }
    for (const Json& st : j.at("strata")) {
      DescriptorDocument::StratumEntry entry;
      entry.support = st.at("support").get<std::vector<std::string>>();
      entry.dimension = st.at("dimension").get<int>();
      entry.lattice = st.at("lattice").get<std::vector<std::vector<long long>>>();
      entry.sample = st.at("sample").get<std::vector<std::string>>();
      entry.exact = st.at("exact").get<bool>();
      doc.strata.push_back(std::move(entry));
    }
    doc.topology_claim = j.at("topology_claim").get<std::string>();
    doc.exact = j.at("exact").get<bool>();
    // Rationals must parse back; reject garbage early rather than on use.
    for (const auto& row : doc.polytope_vertices)
      for (const std::string& s : row) parse_rational(s);
    for (const auto& f : doc.polytope_facets) parse_rational(f.offset);
    for (const auto& st : doc.strata)
      for (const std::string& s : st.sample) parse_rational(s);
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("descriptor JSON: ") + e.what(), 1, 1);
  }
}

}  // namespace semabs
