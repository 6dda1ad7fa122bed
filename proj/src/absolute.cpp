#include "semabs/absolute.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace semabs {

namespace {

bool support_inside(const Exponents& side, unsigned long mask) {
  for (std::size_t s = 0; s < side.size(); ++s)
    if (side[s] > 0 && !(mask & (1ul << s))) return false;
  return true;
}

}  // namespace

std::vector<CentralityEquation> centrality_equations(const CentralPairSet& cp) {
  std::vector<CentralityEquation> eqs;
  eqs.reserve(cp.pairs.size());
  for (const RelationPair& p : cp.pairs) {
    CentralityEquation eq;
    eq.pair = p;
    eq.reduced_pair = p;
    for (std::size_t s = 0; s < p.lhs.size(); ++s) {
      int shared = std::min(p.lhs[s], p.rhs[s]);
      eq.reduced_pair.lhs[s] -= shared;
      eq.reduced_pair.rhs[s] -= shared;
    }
    eqs.push_back(std::move(eq));
  }
  return eqs;
}

std::string render_equation(const GeneratorSet& gens, const CentralityEquation& eq) {
  auto side = [&](const Exponents& e) {
    std::string out;
    for (std::size_t s = 0; s < e.size(); ++s) {
      if (e[s] == 0) continue;
      if (!out.empty()) out += " ";
      out += "mu(" + gens.symbols[s] + ")";
      if (e[s] > 1) out += "^" + std::to_string(e[s]);
    }
    return out.empty() ? std::string("1") : out;
  };
  return side(eq.pair.lhs) + " = " + side(eq.pair.rhs);
}

bool is_precentral(const std::vector<CentralityEquation>& eqs, const DistributionPoint& mu) {
  for (const CentralityEquation& eq : eqs) {
    if (eq.pair.lhs.size() != mu.size())
      throw PreconditionError("equation arity does not match the distribution");
    if (mu.is_exact()) {
      Rat left(1), right(1);
      for (std::size_t s = 0; s < mu.size(); ++s) {
        left *= pow_rat(mu.rational(s), static_cast<unsigned>(eq.pair.lhs[s]));
        right *= pow_rat(mu.rational(s), static_cast<unsigned>(eq.pair.rhs[s]));
      }
      if (left != right) return false;
    } else {
      double left = 1, right = 1;
      for (std::size_t s = 0; s < mu.size(); ++s) {
        left *= std::pow(mu.value(s), eq.pair.lhs[s]);
        right *= std::pow(mu.value(s), eq.pair.rhs[s]);
      }
      double scale = std::max({1.0, std::fabs(left), std::fabs(right)});
      if (std::fabs(left - right) > 1e-12 * scale) return false;
    }
  }
  return true;
}

std::vector<Stratum> strata(const std::vector<CentralityEquation>& eqs, std::size_t s_size,
                            std::size_t max_generators) {
  if (s_size == 0) throw PreconditionError("empty generating system");
  if (s_size > max_generators)
    throw ResourceLimitError("support enumeration over " + std::to_string(s_size) +
                             " generators exceeds the guard");
  std::vector<Stratum> out;
  const unsigned long full = (s_size == 8 * sizeof(unsigned long))
                                 ? ~0ul
                                 : (1ul << s_size) - 1;
  for (unsigned long mask = 1; mask <= full; ++mask) {
    bool excluded = false;
    for (const CentralityEquation& eq : eqs) {
      bool l = support_inside(eq.pair.lhs, mask);
      bool r = support_inside(eq.pair.rhs, mask);
      if (l != r) {
        excluded = true;
        break;
      }
    }
    if (excluded) continue;

    Stratum st;
    for (std::size_t s = 0; s < s_size; ++s)
      if (mask & (1ul << s)) st.support.push_back(s);
    IntMat restricted;
    for (const CentralityEquation& eq : eqs) {
      if (!support_inside(eq.pair.lhs, mask) || !support_inside(eq.pair.rhs, mask)) continue;
      IntVec row;
      for (std::size_t s : st.support) row.push_back(Int(eq.pair.lhs[s] - eq.pair.rhs[s]));
      restricted.push_back(std::move(row));
    }
    st.lattice = lattice_from_rows(std::move(restricted));
    st.dimension = static_cast<int>(st.support.size()) - 1 - st.lattice.rank();
    st.sample = uniform_on(st.support, s_size);
    st.is_main = (st.support.size() == s_size);
    out.push_back(std::move(st));
  }
  return out;
}

std::string to_string(const TopologyClaim& claim) {
  switch (claim.kind) {
    case TopologyClaim::Kind::ClosedDisk:
      return "closed_disk(" + std::to_string(claim.dimension) + ")";
    case TopologyClaim::Kind::CompactStratified:
      return "compact_stratified";
    default:
      return "unknown";
  }
}

AbsoluteDescriptor describe_absolute(const Presentation& p, const DescribeOptions& opts) {
  AbsoluteDescriptor d;
  d.presentation = normalize(p);
  const std::size_t n = d.presentation.generators.size();

  // The lattice side is exact no matter what happens to the completion.
  d.relation_lattice = difference_lattice(d.presentation);
  d.central_lattice = central_sublattice(d.relation_lattice);
  d.dimension = absolute_dimension(d.central_lattice, n);
  d.chart_basis = chart(d.central_lattice, n);
  d.polytope = project_simplex(d.central_lattice, n);

  d.central_pairs = central_pairs_exact(d.presentation, opts.limits, opts.fallback_depth);
  d.exact = d.central_pairs.exact;
  d.equations = centrality_equations(d.central_pairs);
  d.strata = strata(d.equations, n, opts.max_generators);

  switch (d.presentation.declared_class) {
    case SemigroupClass::Group:
    case SemigroupClass::Cancellative:
      // The dimension comes from the lattice alone, so the claim is sound
      // even when the pair set fell back to enumeration.
      d.topology = {TopologyClaim::Kind::ClosedDisk, d.dimension};
      break;
    default:
      d.topology = {TopologyClaim::Kind::CompactStratified, 0};
      break;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

CharacterTable::CharacterTable(DistributionPoint mu, RewriteSystem rs)
    : mu_(std::move(mu)), rs_(std::move(rs)) {}

Rat CharacterTable::value_at(const Exponents& element, int level) const {
  if (level < 0) throw PreconditionError("negative level");
  Exponents wanted = normal_form(rs_, element);
  if (level == 0) {
    for (int x : wanted)
      if (x != 0) throw PreconditionError("only the identity lives at level 0");
    return Rat(1);
  }
  CayleyLevels levels = cayley_levels(rs_, level);
  // Walk the level graph once, remembering one representative word per
  // vertex; precentrality makes the choice irrelevant.
  std::map<Exponents, Exponents> rep;
  rep[levels.levels[0][0]] = Exponents(mu_.size(), 0);
  for (int k = 0; k + 1 <= level; ++k) {
    std::map<Exponents, Exponents> next;
    for (const CayleyEdge& e : levels.edges[k]) {
      const Exponents& target = levels.levels[k + 1][e.target];
      if (next.count(target)) continue;
      Exponents word = rep.at(levels.levels[k][e.source]);
      ++word[e.generator];
      next.emplace(target, std::move(word));
    }
    rep = std::move(next);
  }
  auto it = rep.find(wanted);
  if (it == rep.end())
    throw PreconditionError("element has no representative word of that length");
  Rat value(1);
  for (std::size_t s = 0; s < mu_.size(); ++s)
    value *= pow_rat(mu_.rational(s), static_cast<unsigned>(it->second[s]));
  return value;
}

RatVec CharacterTable::generator_values() const {
  RatVec out;
  for (std::size_t s = 0; s < mu_.size(); ++s) {
    Exponents e(mu_.size(), 0);
    e[s] = 1;
    out.push_back(value_at(e, 1));
  }
  return out;
}

CharacterTable character_from(const DistributionPoint& mu, const RewriteSystem& rs) {
  if (!mu.is_exact())
    throw PreconditionError("character construction needs exact rational weights");
  if (mu.size() != rs.source.generators.size())
    throw PreconditionError("distribution arity does not match the presentation");
  CentralPairSet cp = central_pairs_exact(rs.source);
  if (!is_precentral(centrality_equations(cp), mu))
    throw PreconditionError("distribution is not precentral: path products disagree");
  return CharacterTable(mu, rs);
}

Rat ScaledCharacter::value_at(const Exponents& element, int level) const {
  return table.value_at(element, level) * pow_rat(factor, static_cast<unsigned>(level));
}

RatVec ScaledCharacter::generator_values() const {
  RatVec out = table.generator_values();
  for (Rat& x : out) x *= factor;
  return out;
}

ScaledCharacter scale_character(const CharacterTable& ct, const Rat& factor) {
  if (factor <= 0) throw PreconditionError("scale factor must be positive");
  return ScaledCharacter{ct, factor};
}

ScaledCharacter scale_character(const ScaledCharacter& sc, const Rat& factor) {
  if (factor <= 0) throw PreconditionError("scale factor must be positive");
  return ScaledCharacter{sc.table, sc.factor * factor};
}

// ---------------------------------------------------------------------------
// Quotient comparison
// ---------------------------------------------------------------------------

bool compare_quotient(const Presentation& p1, const Presentation& p2) {
  Presentation a = normalize(p1), b = normalize(p2);
  if (!(a.generators == b.generators))
    throw PreconditionError("presentations use different generator systems");
  AbsoluteDescriptor da = describe_absolute(a), db = describe_absolute(b);
  return da.central_lattice == db.central_lattice && da.strata == db.strata;
}

}  // namespace semabs
