#include "semabs/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace semabs {

namespace {

// Number of step multisets of size `total` over `n` generators.
Int multiset_count(int total, std::size_t n) {
  Exponents parts = {total, static_cast<int>(n) - 1};
  return multinomial(parts);
}

void for_each_multiset(int total, std::size_t n, const std::function<void(const Exponents&)>& fn) {
  Exponents v(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
    if (pos + 1 == n) {
      v[pos] = remaining;
      fn(v);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      v[pos] = k;
      rec(pos + 1, remaining - k);
    }
  };
  if (n > 0) rec(0, total);
}

Rat exact_product(const DistributionPoint& mu, const Exponents& w) {
  Rat out(1);
  for (std::size_t s = 0; s < w.size(); ++s)
    out *= pow_rat(mu.rational(s), static_cast<unsigned>(w[s]));
  return out;
}

double float_product(const DistributionPoint& mu, const Exponents& w) {
  double out = 1;
  for (std::size_t s = 0; s < w.size(); ++s) out *= std::pow(mu.value(s), w[s]);
  return out;
}

bool float_equal(double a, double b) {
  return std::fabs(a - b) <= 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

std::string format_probability(const DistributionPoint& mu, const Exponents& w) {
  if (mu.is_exact()) return format_rational(exact_product(mu, w));
  std::ostringstream out;
  out << float_product(mu, w);
  return out.str();
}

void check_arity(const RewriteSystem& rs, const DistributionPoint& mu) {
  if (mu.size() != rs.source.generators.size())
    throw PreconditionError("distribution arity does not match the presentation");
}

void check_width(int level, std::size_t n, std::size_t max_width) {
  if (multiset_count(level, n) > Int(max_width))
    throw ResourceLimitError("level " + std::to_string(level) +
                             " is too wide to enumerate (limit " +
                             std::to_string(max_width) + ")");
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double unit_draw(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

VerificationReport verify_central(const RewriteSystem& rs, const DistributionPoint& mu,
                                  int depth, std::size_t max_width) {
  check_arity(rs, mu);
  if (depth < 0) throw PreconditionError("negative depth");
  const std::size_t n = mu.size();

  VerificationReport report;
  report.depth = depth;
  report.exact_arithmetic = mu.is_exact();

  std::map<std::pair<Exponents, int>, std::vector<Exponents>> groups;
  for (int level = 1; level <= depth; ++level) {
    check_width(level, n, max_width);
    for_each_multiset(level, n, [&](const Exponents& w) {
      groups[{normal_form(rs, w), level}].push_back(w);
    });
  }

  for (auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(),
              [&](const Exponents& a, const Exponents& b) { return rs.order.compare(a, b) > 0; });
    bool found = false;
    for (std::size_t i = 0; i < members.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < members.size() && !found; ++j) {
        bool differ;
        if (mu.is_exact())
          differ = exact_product(mu, members[i]) != exact_product(mu, members[j]);
        else
          differ = !float_equal(float_product(mu, members[i]), float_product(mu, members[j]));
        if (differ) {
          PathWitness w;
          w.vertex = key.first;
          w.level = key.second;
          w.path_a = render_side(members[i], rs.source.generators);
          w.path_b = render_side(members[j], rs.source.generators);
          w.prob_a = format_probability(mu, members[i]);
          w.prob_b = format_probability(mu, members[j]);
          report.witnesses.push_back(std::move(w));
          found = true;
        }
      }
    }
  }
  report.passed = report.witnesses.empty();
  return report;
}

bool verify_shift(const RewriteSystem& rs, const DistributionPoint& mu,
                  const Exponents& prefix, int depth, std::size_t max_width) {
  check_arity(rs, mu);
  if (prefix.size() != mu.size())
    throw PreconditionError("prefix arity does not match the presentation");
  if (depth < 0) throw PreconditionError("negative depth");
  const std::size_t n = mu.size();

  bool ok = true;
  if (mu.is_exact()) {
    Rat base = exact_product(mu, prefix);
    if (base == 0) throw PreconditionError("prefix has probability zero");
    for (int level = 0; level <= depth && ok; ++level) {
      check_width(level, n, max_width);
      for_each_multiset(level, n, [&](const Exponents& w) {
        Exponents shifted = prefix;
        for (std::size_t s = 0; s < n; ++s) shifted[s] += w[s];
        if (exact_product(mu, shifted) != base * exact_product(mu, w)) ok = false;
      });
    }
  } else {
    double base = float_product(mu, prefix);
    if (base == 0) throw PreconditionError("prefix has probability zero");
    for (int level = 0; level <= depth && ok; ++level) {
      check_width(level, n, max_width);
      for_each_multiset(level, n, [&](const Exponents& w) {
        Exponents shifted = prefix;
        for (std::size_t s = 0; s < n; ++s) shifted[s] += w[s];
        if (!float_equal(float_product(mu, shifted), base * float_product(mu, w))) ok = false;
      });
    }
  }
  return ok;
}

WalkSample walk_sample(const RewriteSystem& rs, const DistributionPoint& mu, int steps,
                       std::uint64_t seed) {
  check_arity(rs, mu);
  if (steps < 0) throw PreconditionError("negative step count");
  const std::size_t n = mu.size();
  std::vector<double> cumulative(n);
  double acc = 0;
  for (std::size_t s = 0; s < n; ++s) {
    acc += mu.value(s);
    cumulative[s] = acc;
  }

  WalkSample sample;
  sample.seed = seed;
  std::mt19937_64 engine(seed);
  Exponents total(n, 0);
  for (int k = 0; k < steps; ++k) {
    double u = unit_draw(engine);
    std::size_t pick = n - 1;
    for (std::size_t s = 0; s < n; ++s) {
      if (u < cumulative[s]) {
        pick = s;
        break;
      }
    }
    sample.steps.push_back(pick);
    ++total[pick];
  }
  sample.endpoint = normal_form(rs, total);
  return sample;
}

SimulationStats simulate(const RewriteSystem& rs, const DistributionPoint& mu, int steps,
                         long long trials, std::uint64_t seed, std::size_t max_width) {
  check_arity(rs, mu);
  if (steps < 0) throw PreconditionError("negative step count");
  if (trials < 0) throw PreconditionError("negative trial count");

  SimulationStats stats;
  stats.steps = steps;
  stats.trials = trials;
  if (trials == 0) return stats;

  std::map<Exponents, long long> counts;
  for (long long t = 0; t < trials; ++t) {
    std::uint64_t trial_seed = mix64(seed ^ mix64(static_cast<std::uint64_t>(t)));
    WalkSample sample = walk_sample(rs, mu, steps, trial_seed);
    ++counts[sample.endpoint];
  }
  for (const auto& [endpoint, count] : counts)
    stats.frequencies.emplace_back(endpoint, static_cast<double>(count) / trials);

  const std::size_t n = mu.size();
  if (mu.is_exact() && multiset_count(steps, n) <= Int(max_width)) {
    std::map<Exponents, Rat> law;
    for_each_multiset(steps, n, [&](const Exponents& w) {
      law[normal_form(rs, w)] += Rat(multinomial(w)) * exact_product(mu, w);
    });
    for (const auto& [endpoint, p] : law) {
      if (p == 0) continue;
      stats.exact_probabilities.emplace_back(endpoint, p);
      double pd = static_cast<double>(p);
      if (pd <= 0 || pd >= 1) continue;
      auto it = counts.find(endpoint);
      double freq = it == counts.end() ? 0.0 : static_cast<double>(it->second) / trials;
      double sigma = std::sqrt(pd * (1 - pd) / static_cast<double>(trials));
      stats.max_sigma = std::max(stats.max_sigma, std::fabs(freq - pd) / sigma);
    }
  }
  return stats;
}

}  // namespace semabs
