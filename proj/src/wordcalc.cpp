#include "semabs/wordcalc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace semabs {

namespace {

int degrevlex_compare(const Exponents& a, const Exponents& b, std::size_t lo,
                      std::size_t hi) {
  long long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller last exponent wins
  }
  return 0;
}

int deglex_compare(const Exponents& a, const Exponents& b) {
  long long da = vec_sum(a), db = vec_sum(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  switch (kind) {
    case OrderKind::DegRevLex:
      return degrevlex_compare(a, b, 0, a.size());
    case OrderKind::DegLex:
      return deglex_compare(a, b);
    case OrderKind::EliminationBlock: {
      int c = degrevlex_compare(a, b, 0, block_split);
      if (c != 0) return c;
      return degrevlex_compare(a, b, block_split, a.size());
    }
  }
  return 0;
}

namespace {

bool divides(const Exponents& lead, const Exponents& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (lead[i] > v[i]) return false;
  return true;
}

Exponents apply_rule(const Exponents& v, const BinomialRule& r) {
  Exponents w = v;
  for (std::size_t i = 0; i < v.size(); ++i) w[i] += r.trail[i] - r.lead[i];
  return w;
}

Exponents reduce(const std::vector<BinomialRule>& rules, Exponents v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (divides(r.lead, v)) {
        v = apply_rule(v, r);
        changed = true;
        break;
      }
    }
  }
  return v;
}

std::optional<BinomialRule> orient(const Exponents& a, const Exponents& b,
                                   const MonomialOrder& order) {
  int c = order.compare(a, b);
  if (c == 0) return std::nullopt;
  return c > 0 ? BinomialRule{a, b} : BinomialRule{b, a};
}

struct PendingPair {
  Exponents lcm;
  std::size_t i, j;
};

struct CompletionCore {
  MonomialOrder order;
  CompletionLimits limits;
  std::vector<BinomialRule> rules;
  bool confluent = false;

  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const PendingPair& a, const PendingPair& b) const {
      int c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  void run(std::vector<BinomialRule> start) {
    std::set<PendingPair, PairLess> queue{PairLess{&order}};
    auto enqueue = [&](std::size_t i, std::size_t j) {
      const auto& a = rules[i].lead;
      const auto& b = rules[j].lead;
      Exponents lcm(a.size());
      bool coprime = true;
      for (std::size_t k = 0; k < a.size(); ++k) {
        lcm[k] = std::max(a[k], b[k]);
        if (a[k] > 0 && b[k] > 0) coprime = false;
      }
      if (coprime) return;  // S-pair reduces to zero
      queue.insert({std::move(lcm), i, j});
    };
    auto add_rule = [&](BinomialRule r) {
      for (const auto& existing : rules)
        if (existing == r) return;
      rules.push_back(std::move(r));
      for (std::size_t i = 0; i + 1 < rules.size(); ++i) enqueue(i, rules.size() - 1);
    };

    for (auto& r : start) add_rule(std::move(r));

    std::size_t steps = 0;
    while (!queue.empty()) {
      if (++steps > limits.max_steps || rules.size() > limits.max_rules) return;
      PendingPair p = *queue.begin();
      queue.erase(queue.begin());
      Exponents v1 = p.lcm, v2 = p.lcm;
      for (std::size_t k = 0; k < v1.size(); ++k) {
        v1[k] += rules[p.i].trail[k] - rules[p.i].lead[k];
        v2[k] += rules[p.j].trail[k] - rules[p.j].lead[k];
      }
      Exponents n1 = reduce(rules, std::move(v1));
      Exponents n2 = reduce(rules, std::move(v2));
      if (auto r = orient(n1, n2, order)) add_rule(std::move(*r));
    }

    interreduce();
    confluent = validate();
  }

  // Keeps the canonical reduced system: minimal leads, fully reduced trails,
  // rules sorted ascending by lead. Unique for the congruence and order.
  void interreduce() {
    std::vector<bool> dead(rules.size(), false);
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (dead[i]) continue;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        if (i == j || dead[j]) continue;
        if (divides(rules[j].lead, rules[i].lead) &&
            (rules[j].lead != rules[i].lead || j < i)) {
          dead[i] = true;
          break;
        }
      }
    }
    std::vector<BinomialRule> live;
    for (std::size_t i = 0; i < rules.size(); ++i)
      if (!dead[i]) live.push_back(rules[i]);
    for (auto& r : live) r.trail = reduce(live, r.trail);
    std::sort(live.begin(), live.end(), [&](const auto& a, const auto& b) {
      int c = order.compare(a.lead, b.lead);
      if (c != 0) return c < 0;
      return order.compare(a.trail, b.trail) < 0;
    });
    rules = std::move(live);
  }

  // Rechecks every critical pair of the final system.
  bool validate() {
    for (std::size_t i = 0; i < rules.size(); ++i)
      for (std::size_t j = i + 1; j < rules.size(); ++j) {
        const auto& a = rules[i].lead;
        const auto& b = rules[j].lead;
        Exponents lcm(a.size());
        bool coprime = true;
        for (std::size_t k = 0; k < a.size(); ++k) {
          lcm[k] = std::max(a[k], b[k]);
          if (a[k] > 0 && b[k] > 0) coprime = false;
        }
        if (coprime) continue;
        Exponents v1 = lcm, v2 = lcm;
        for (std::size_t k = 0; k < a.size(); ++k) {
          v1[k] += rules[i].trail[k] - rules[i].lead[k];
          v2[k] += rules[j].trail[k] - rules[j].lead[k];
        }
        if (reduce(rules, v1) != reduce(rules, v2)) return false;
      }
    return true;
  }
};

}  // namespace

RewriteSystem complete(const Presentation& p, MonomialOrder order,
                       CompletionLimits limits) {
  Presentation q = normalize(p);
  CompletionCore core;
  core.order = order;
  core.limits = limits;
  std::vector<BinomialRule> start;
  for (const auto& rel : q.relations)
    if (auto r = orient(rel.lhs, rel.rhs, order)) start.push_back(std::move(*r));
  core.run(std::move(start));

  RewriteSystem rs;
  rs.rules = std::move(core.rules);
  rs.order = order;
  rs.confluent = core.confluent;
  rs.var_count = q.generators.size();
  rs.source = std::move(q);
  return rs;
}

Exponents normal_form(const RewriteSystem& rs, Exponents v) {
  if (v.size() != rs.var_count)
    throw PreconditionError("vector arity does not match the rewrite system");
  for (int x : v)
    if (x < 0) throw PreconditionError("negative exponent has no normal form");
  return reduce(rs.rules, std::move(v));
}

CayleyLevels cayley_levels(const RewriteSystem& rs, int depth, std::size_t max_width) {
  if (depth < 0) throw PreconditionError("depth must be nonnegative");
  CayleyLevels out;
  out.depth = depth;
  const std::size_t n = rs.var_count;
  out.levels.push_back({Exponents(n, 0)});

  for (int level = 0; level < depth; ++level) {
    const auto& current = out.levels.back();
    std::set<Exponents> next_set;
    for (const auto& v : current)
      for (std::size_t s = 0; s < n; ++s) {
        Exponents w = v;
        ++w[s];
        next_set.insert(reduce(rs.rules, std::move(w)));
        if (next_set.size() > max_width)
          throw ResourceLimitError("level width cap exceeded at level " +
                                   std::to_string(level + 1));
      }
    std::vector<Exponents> next(next_set.begin(), next_set.end());
    std::sort(next.begin(), next.end(), [&](const Exponents& a, const Exponents& b) {
      return rs.order.compare(a, b) > 0;  // descending: level 1 = generator order
    });
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < next.size(); ++i) index[next[i]] = i;

    std::vector<CayleyEdge> edges;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t s = 0; s < n; ++s) {
        Exponents w = current[i];
        ++w[s];
        edges.push_back({i, s, index.at(reduce(rs.rules, std::move(w)))});
      }
    out.edges.push_back(std::move(edges));
    out.levels.push_back(std::move(next));
  }
  return out;
}

namespace {

void enumerate_compositions(int total, std::size_t pos, Exponents& scratch,
                            const std::function<void(const Exponents&)>& emit) {
  if (pos + 1 == scratch.size()) {
    scratch[pos] = total;
    emit(scratch);
    return;
  }
  for (int k = total; k >= 0; --k) {
    scratch[pos] = k;
    enumerate_compositions(total - k, pos + 1, scratch, emit);
  }
}

// Orientation for stored pairs: lhs > rhs under plain degrevlex.
RelationPair canonical_pair(const Exponents& a, const Exponents& b) {
  MonomialOrder order;  // degrevlex
  return order.compare(a, b) >= 0 ? RelationPair{a, b} : RelationPair{b, a};
}

std::vector<RelationPair> minimalize_pairs(std::vector<RelationPair> pairs) {
  MonomialOrder order;
  std::sort(pairs.begin(), pairs.end(), [&](const RelationPair& a, const RelationPair& b) {
    long long sa = vec_sum(a.lhs), sb = vec_sum(b.lhs);
    if (sa != sb) return sa < sb;
    int c = order.compare(a.lhs, b.lhs);
    if (c != 0) return c < 0;
    return order.compare(a.rhs, b.rhs) < 0;
  });
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<RelationPair> kept;
  for (const auto& p : pairs)
    if (!pair_generated(p.lhs, p.rhs, kept)) kept.push_back(p);
  return kept;
}

}  // namespace

bool pair_generated(const Exponents& lhs, const Exponents& rhs,
                    const std::vector<RelationPair>& pairs,
                    std::size_t max_states) {
  if (lhs == rhs) return true;
  if (lhs.size() != rhs.size()) throw PreconditionError("pair sides have different arities");
  if (vec_sum(lhs) != vec_sum(rhs)) return false;
  // Breadth-first search from lhs. Every usable pair preserves total degree,
  // so the state space is a slice of fixed degree and the search terminates.
  std::set<Exponents> seen{lhs};
  std::vector<Exponents> frontier{lhs};
  while (!frontier.empty()) {
    std::vector<Exponents> next;
    for (const Exponents& v : frontier) {
      for (const RelationPair& q : pairs) {
        if (q.lhs.size() != lhs.size()) throw PreconditionError("pair arity mismatch");
        if (vec_sum(q.lhs) != vec_sum(q.rhs)) continue;  // cannot stay in the slice
        for (int swap = 0; swap < 2; ++swap) {
          const Exponents& from = swap ? q.rhs : q.lhs;
          const Exponents& to = swap ? q.lhs : q.rhs;
          Exponents w = v;
          bool ok = true;
          for (std::size_t i = 0; i < w.size() && ok; ++i) {
            w[i] += to[i] - from[i];
            if (v[i] < from[i]) ok = false;
          }
          if (!ok) continue;
          if (w == rhs) return true;
          if (seen.size() >= max_states) return false;
          if (seen.insert(w).second) next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

CentralPairSet central_pairs_exact(const Presentation& p, CompletionLimits limits,
                                   int fallback_depth) {
  Presentation q = normalize(p);
  const std::size_t n = q.generators.size();
  const std::size_t vars = 2 * n + 1;  // u_0..u_{n-1}, z, x_0..x_{n-1}
  MonomialOrder elim{OrderKind::EliminationBlock, n + 1};

  auto embed_u = [&](const Exponents& v) {
    Exponents w(vars, 0);
    for (std::size_t i = 0; i < n; ++i) w[i] = v[i];
    return w;
  };

  std::vector<BinomialRule> start;
  for (const auto& rel : q.relations)
    if (auto r = orient(embed_u(rel.lhs), embed_u(rel.rhs), elim))
      start.push_back(std::move(*r));
  for (std::size_t s = 0; s < n; ++s) {
    Exponents lead(vars, 0), trail(vars, 0);
    lead[s] = 1;
    lead[n] = 1;           // u_s * z
    trail[n + 1 + s] = 1;  // x_s
    start.push_back({std::move(lead), std::move(trail)});
  }

  CompletionCore core;
  core.order = elim;
  core.limits = limits;
  core.run(std::move(start));

  if (!core.confluent) {
    RewriteSystem rs = complete(q, MonomialOrder{}, limits);
    if (!rs.confluent)
      throw ResourceLimitError("completion hit resource caps in both the "
                               "elimination and the direct system");
    return central_pairs_enumerated(rs, fallback_depth);
  }

  std::vector<RelationPair> pairs;
  for (const auto& r : core.rules) {
    bool pure = true;
    for (std::size_t i = 0; i <= n && pure; ++i)
      if (r.lead[i] != 0 || r.trail[i] != 0) pure = false;
    if (!pure) continue;
    Exponents a(r.lead.begin() + n + 1, r.lead.end());
    Exponents b(r.trail.begin() + n + 1, r.trail.end());
    if (vec_sum(a) != vec_sum(b))
      throw Error("internal: surviving pair is not homogeneous");
    pairs.push_back(canonical_pair(a, b));
  }

  CentralPairSet out;
  out.pairs = minimalize_pairs(std::move(pairs));
  out.exact = true;
  return out;
}

CentralPairSet central_pairs_enumerated(const RewriteSystem& rs, int depth,
                                        std::size_t max_width) {
  if (!rs.confluent)
    throw PreconditionError("enumeration needs a confluent rewrite system");
  if (depth < 0) throw PreconditionError("depth must be nonnegative");

  std::vector<RelationPair> pairs;
  for (int length = 1; length <= depth; ++length) {
    std::map<Exponents, std::vector<Exponents>> classes;
    Exponents scratch(rs.var_count, 0);
    std::size_t count = 0;
    std::function<void(const Exponents&)> emit = [&](const Exponents& m) {
      if (++count > max_width)
        throw ResourceLimitError("enumeration width cap exceeded");
      classes[reduce(rs.rules, m)].push_back(m);
    };
    enumerate_compositions(length, 0, scratch, emit);
    for (const auto& [nf, members] : classes)
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          pairs.push_back(canonical_pair(members[i], members[j]));
  }

  CentralPairSet out;
  out.pairs = minimalize_pairs(std::move(pairs));
  out.exact = false;
  out.depth_bound = depth;
  return out;
}

bool is_branching(const RewriteSystem& rs) {
  if (!rs.confluent)
    throw PreconditionError("branching test needs a completed rewrite system");
  for (const auto& r : rs.rules)
    if (vec_sum(r.lead) != vec_sum(r.trail)) return false;
  return true;
}

std::optional<CancellationWitness> cancellativity_witness(const RewriteSystem& rs,
                                                          int depth) {
  CayleyLevels cl = cayley_levels(rs, depth);
  std::vector<Exponents> elements;
  std::set<Exponents> seen;
  for (const auto& level : cl.levels)
    for (const auto& v : level)
      if (seen.insert(v).second) elements.push_back(v);

  const Exponents& identity = cl.levels[0][0];
  for (const auto& c : elements) {
    if (c == identity) continue;
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (std::size_t j = i + 1; j < elements.size(); ++j) {
        Exponents ac = elements[i], bc = elements[j];
        for (std::size_t k = 0; k < c.size(); ++k) {
          ac[k] += c[k];
          bc[k] += c[k];
        }
        if (reduce(rs.rules, std::move(ac)) == reduce(rs.rules, std::move(bc)))
          return CancellationWitness{elements[i], elements[j], c};
      }
  }
  return std::nullopt;
}

}  // namespace semabs
