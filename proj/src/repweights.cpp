#include "purelie/repweights.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace purelie {

RepSpec RepSpec::irreducible(const RootSystem& rs, const Weight& lambda) {
  return RepSpec{&rs, {{lambda, 1}}};
}

std::string RepSpec::describe() const {
  std::ostringstream os;
  os << rs->type().name() << ' ';
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) os << " + ";
    if (summands[i].second != 1) os << summands[i].second << "*";
    os << omega_notation(summands[i].first);
  }
  return os.str();
}

std::int64_t WeightSystem::mult(const Weight& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

std::vector<Weight> WeightSystem::nonzero_weights() const {
  std::vector<Weight> out;
  for (const auto& [w, m] : entries)
    if (!w.is_zero()) out.push_back(w);
  return out;
}

BigInt weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank() || !lambda.is_dominant())
    throw InvalidInput("weyl_dim needs a dominant weight of " + rs.type().name());
  const Weight shifted = lambda + rs.rho();
  BigInt num = 1, den = 1;
  for (const auto& beta : rs.positive_root_coords()) {
    num *= rs.pair_with_root_coords(shifted, beta);
    den *= rs.pair_with_root_coords(rs.rho(), beta);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension not integral");
  return num / den;
}

namespace {

std::map<Weight, std::int64_t> freudenthal(const RootSystem& rs, const Weight& lambda) {
  const auto& roots = rs.positive_roots();
  const auto& coords = rs.positive_root_coords();

  // Dominant weights below lambda are connected through single positive-root steps.
  std::set<Weight> dominant{lambda};
  std::vector<Weight> stack{lambda};
  while (!stack.empty()) {
    Weight x = stack.back();
    stack.pop_back();
    for (const auto& beta : roots) {
      Weight y = x - beta;
      if (y.is_dominant() && dominant.insert(y).second) stack.push_back(y);
    }
  }

  struct Item {
    std::int64_t height;
    Weight mu;
    std::vector<std::int64_t> depth;  // lambda - mu in simple-root coordinates
  };
  std::vector<Item> order;
  for (const auto& mu : dominant) {
    auto c = rs.root_coords(lambda - mu);
    order.push_back({std::accumulate(c->begin(), c->end(), std::int64_t{0}), mu, *c});
  }
  std::sort(order.begin(), order.end(), [](const Item& a, const Item& b) {
    return a.height != b.height ? a.height < b.height : a.mu > b.mu;
  });

  std::map<Weight, std::int64_t> mult;
  const Weight two_rho = rs.rho().scaled(2);
  for (const auto& item : order) {
    if (item.height == 0) {
      mult[item.mu] = 1;
      continue;
    }
    std::int64_t num = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      Weight nu = item.mu + roots[r];
      for (;;) {
        auto it = mult.find(rs.dominant_representative(nu));
        if (it == mult.end()) break;
        num += it->second * rs.pair_with_root_coords(nu, coords[r]);
        nu = nu + roots[r];
      }
    }
    num *= 2;
    const std::int64_t den = rs.pair_with_root_coords(lambda + item.mu + two_rho, item.depth);
    if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion not integral");
    mult[item.mu] = num / den;
  }
  return mult;
}

}  // namespace

std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank() || !lambda.is_dominant())
    throw InvalidInput("highest weight must be dominant");
  static std::mutex mu;
  static std::map<std::pair<SimpleType, Weight>, std::shared_ptr<const std::map<Weight, std::int64_t>>> cache;
  const auto key = std::make_pair(rs.type(), lambda);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_shared<const std::map<Weight, std::int64_t>>(freudenthal(rs, lambda));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, value);
  return *value;
}

WeightSystem weight_system(const RepSpec& spec) {
  if (!spec.rs) throw InvalidInput("representation without root system");
  WeightSystem ws;
  for (const auto& [lambda, copies] : spec.summands) {
    if (copies < 1) throw InvalidInput("summand multiplicity must be positive");
    for (const auto& [mu, m] : dominant_multiplicities(*spec.rs, lambda))
      for (const auto& w : spec.rs->weyl_orbit(mu)) {
        ws.entries[w] += m * copies;
        ws.total_dim += m * copies;
      }
  }
  return ws;
}

WeightSystem weight_system(const RootSystem& rs, const Weight& lambda) {
  return weight_system(RepSpec::irreducible(rs, lambda));
}

std::int64_t zero_weight_mult(const WeightSystem& ws) {
  for (const auto& [w, m] : ws.entries)
    if (w.is_zero()) return m;
  return 0;
}

WeightBoundsReport verify_weight_bounds(const RootSystem& rs, const Weight& lambda) {
  if (lambda.is_zero()) throw InvalidInput("weight bounds need a nontrivial representation");
  const WeightSystem ws = weight_system(rs, lambda);
  const std::int64_t v0 = zero_weight_mult(ws);
  std::int64_t simple_sum = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i) simple_sum += ws.mult(rs.simple_root(i));
  const BigInt dim = ws.total_dim;
  const std::int64_t rk = static_cast<std::int64_t>(rs.rank());
  const std::int64_t g = rs.group_dim();
  WeightBoundsReport r{};
  r.zero_weight_vs_simple_roots = v0 <= simple_sum;
  r.zero_weight_ratio = BigInt(v0) * (g - rk) <= dim * rk;
  r.nonzero_weight_count = dim - v0 <= BigInt(rk) * (g + 1);
  return r;
}

}  // namespace purelie
