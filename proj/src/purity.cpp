#include "purelie/purity.hpp"

#include "purelie/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace purelie {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// s_j acts on residues through t -> t o s_j: only r_j changes, by -t(alpha_j).
void reflect_residues(const RootSystem& rs, std::size_t j, std::int64_t order, std::vector<std::int64_t>& r) {
  std::int64_t t_alpha = 0;
  for (std::size_t k = 0; k < rs.rank(); ++k) t_alpha += rs.cartan(k, j) * r[k];
  r[j] = mod(r[j] - t_alpha, order);
}

std::vector<std::vector<std::int64_t>> residue_orbit(const RootSystem& rs, std::int64_t order,
                                                     const std::vector<std::int64_t>& start) {
  std::set<std::vector<std::int64_t>> seen{start};
  std::vector<std::vector<std::int64_t>> stack{start};
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    auto neg = x;
    for (auto& v : neg) v = mod(-v, order);
    if (seen.insert(neg).second) stack.push_back(neg);
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      auto y = x;
      reflect_residues(rs, j, order, y);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::int64_t ToralClass::exact_order() const {
  std::int64_t g = order;
  for (auto r : residues) g = std::gcd(g, r);
  return order / g;
}

std::string format_class(const ToralClass& t) {
  std::ostringstream os;
  os << "Z/" << t.order << "[";
  for (std::size_t i = 0; i < t.residues.size(); ++i) os << (i ? "," : "") << t.residues[i];
  os << "]";
  return os.str();
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::CertifiedImpure: return "CertifiedImpure";
    case VerdictKind::NecessaryConditionFails: return "NecessaryConditionFails";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ToralClass canonical_class(const RootSystem& rs, std::int64_t order, std::vector<std::int64_t> residues) {
  if (order < 2) throw InvalidInput("toral order must be at least 2");
  if (residues.size() != rs.rank()) throw InvalidInput("residue vector has wrong length");
  for (auto& r : residues) r = mod(r, order);
  return ToralClass{order, residue_orbit(rs, order, residues).front()};
}

std::vector<ToralClass> toral_orbit_reps(const RootSystem& rs, std::int64_t order, bool exact_order,
                                         std::uint64_t cap) {
  if (order < 2) throw InvalidInput("toral order must be at least 2");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    total *= static_cast<std::uint64_t>(order);
    if (total > cap)
      throw CapExceeded("toral enumeration: " + std::to_string(order) + "^" + std::to_string(rs.rank()) +
                        " exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = rs.rank();
  auto decode = [&](std::uint64_t code) {
    std::vector<std::int64_t> r(n);
    for (std::size_t i = n; i-- > 0;) {
      r[i] = static_cast<std::int64_t>(code % order);
      code /= order;
    }
    return r;
  };
  auto encode = [&](const std::vector<std::int64_t>& r) {
    std::uint64_t code = 0;
    for (auto v : r) code = code * order + static_cast<std::uint64_t>(v);
    return code;
  };
  std::vector<char> visited(total, 0);
  std::vector<ToralClass> reps;
  for (std::uint64_t code = 1; code < total; ++code) {
    if (visited[code]) continue;
    // Codes ascend lexicographically, so the first unvisited code is its orbit's minimum.
    auto start = decode(code);
    std::vector<std::uint64_t> stack{code};
    visited[code] = 1;
    while (!stack.empty()) {
      auto x = decode(stack.back());
      stack.pop_back();
      auto neg = x;
      for (auto& v : neg) v = mod(-v, order);
      std::uint64_t c = encode(neg);
      if (!visited[c]) visited[c] = 1, stack.push_back(c);
      for (std::size_t j = 0; j < n; ++j) {
        auto y = x;
        reflect_residues(rs, j, order, y);
        c = encode(y);
        if (!visited[c]) visited[c] = 1, stack.push_back(c);
      }
    }
    ToralClass t{order, start};
    if (!exact_order || t.exact_order() == order) reps.push_back(std::move(t));
  }
  return reps;
}

std::int64_t fixed_dim(const WeightSystem& ws, const ToralClass& t) {
  std::int64_t total = 0;
  for (const auto& [mu, m] : ws.entries) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) s += mu[i] * t.residues[i];
    if (mod(s, t.order) == 0) total += m;
  }
  return total;
}

PurityVerdict toral_impurity_check(const RepSpec& spec, std::int64_t order, bool exact_order,
                                   std::uint64_t cap) {
  const WeightSystem ws = weight_system(spec);
  if (ws.total_dim <= 1 && ws.entries.size() <= 1) throw InvalidInput("trivial representation");
  auto classes = toral_orbit_reps(*spec.rs, order, exact_order, cap);
  std::vector<std::int64_t> dims(classes.size());
  parallel_for(classes.size(), [&](std::size_t i) { dims[i] = fixed_dim(ws, classes[i]); });

  PurityVerdict v;
  v.order_used = order;
  v.bound = ws.total_dim - spec.rs->group_dim() - 2;
  v.classes_checked = classes.size();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (dims[i] > v.bound) {
      v.offending_classes.emplace_back(classes[i], dims[i]);
    } else if (!v.max_non_offending || dims[i] > *v.max_non_offending) {
      v.max_non_offending = dims[i];
    }
  }
  v.kind = v.offending_classes.empty() && !classes.empty() ? VerdictKind::CertifiedImpure
                                                           : VerdictKind::Inconclusive;
  return v;
}

namespace {

using i128 = __int128;

i128 det_bareiss(std::vector<std::vector<i128>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  i128 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Generalized cross product of rank-1 vectors in Z^rank; zero iff dependent.
std::vector<std::int64_t> cross(const std::vector<const Weight*>& rows, std::size_t rank) {
  std::vector<std::int64_t> normal(rank);
  for (std::size_t skip = 0; skip < rank; ++skip) {
    std::vector<std::vector<i128>> m;
    for (const Weight* w : rows) {
      std::vector<i128> row;
      for (std::size_t c = 0; c < rank; ++c)
        if (c != skip) row.push_back((*w)[c]);
      m.push_back(std::move(row));
    }
    i128 d = det_bareiss(std::move(m));
    normal[skip] = static_cast<std::int64_t>((skip % 2 ? -d : d));
  }
  std::int64_t g = 0;
  for (auto x : normal) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) return normal;
  for (auto& x : normal) x /= g;
  auto first = std::find_if(normal.begin(), normal.end(), [](auto x) { return x != 0; });
  if (*first < 0)
    for (auto& x : normal) x = -x;
  return normal;
}

Weight primitive_direction(const Weight& w) {
  std::int64_t g = 0;
  for (auto x : w.coords) g = std::gcd(g, x < 0 ? -x : x);
  Weight d = w;
  for (auto& x : d.coords) x /= g;
  auto first = std::find_if(d.coords.begin(), d.coords.end(), [](auto x) { return x != 0; });
  if (*first < 0) d = -d;
  return d;
}

}  // namespace

HyperplaneData max_hyperplane_count(const RootSystem& rs, const WeightSystem& ws, std::uint64_t cap) {
  const std::size_t rank = rs.rank();
  HyperplaneData best;
  auto count_on = [&](const std::vector<std::int64_t>& normal) {
    std::int64_t c = 0;
    for (const auto& [mu, m] : ws.entries) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < rank; ++i) s += mu[i] * normal[i];
      if (s == 0) c += m;
    }
    return c;
  };
  auto consider = [&](const std::vector<std::int64_t>& normal) {
    const std::int64_t c = count_on(normal);
    IntVector n(normal.begin(), normal.end());
    if (best.normal.empty() || c > best.max_count || (c == best.max_count && n < best.normal)) {
      best.max_count = c;
      best.normal = std::move(n);
    }
  };
  if (rank == 1) {
    consider({1});
    return best;
  }

  std::set<Weight> dir_set;
  for (const auto& w : ws.nonzero_weights()) dir_set.insert(primitive_direction(w));
  std::vector<Weight> dirs(dir_set.begin(), dir_set.end());

  std::vector<IntVector> as_int;
  for (const auto& d : dirs) as_int.emplace_back(d.coords.begin(), d.coords.end());
  if (purelie::rank(IntMatrix::from_rows(as_int.empty() ? std::vector<IntVector>{IntVector(rank)} : as_int)) <
      rank) {
    // Every weight lies in one hyperplane; pick any normal of their span.
    std::vector<RatVector> rows;
    for (const auto& v : as_int) rows.emplace_back(v.begin(), v.end());
    for (std::size_t e = 0; e < rank && purelie::rank(rows) + 1 < rank; ++e) {
      RatVector unit(rank);
      unit[e] = 1;
      rows.push_back(unit);
    }
    auto n = primitive_normal(rows, rank);
    std::vector<std::int64_t> normal;
    for (const auto& x : *n) normal.push_back(static_cast<std::int64_t>(x));
    consider(normal);
    return best;
  }

  const std::size_t k = rank - 1;
  BigInt subsets = 1;
  for (std::size_t i = 0; i < k; ++i) subsets = subsets * (dirs.size() - i) / (i + 1);
  if (subsets > cap)
    throw CapExceeded("hyperplane enumeration: C(" + std::to_string(dirs.size()) + "," + std::to_string(k) +
                      ") exceeds cap " + std::to_string(cap));

  std::set<std::vector<std::int64_t>> normals;
  std::vector<std::size_t> idx(k);
  std::vector<const Weight*> rows(k);
  // Plain lexicographic walk over k-subsets.
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) rows[i] = &dirs[idx[i]];
    auto n = cross(rows, rank);
    if (std::any_of(n.begin(), n.end(), [](auto x) { return x != 0; }) && normals.insert(n).second) consider(n);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == dirs.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

PurityVerdict hyperplane_necessity_check(const RepSpec& spec, std::uint64_t cap) {
  const WeightSystem ws = weight_system(spec);
  PurityVerdict v;
  v.bound = ws.total_dim - spec.rs->group_dim() - 1;
  v.hyperplane = max_hyperplane_count(*spec.rs, ws, cap);
  v.kind = v.hyperplane->max_count < v.bound ? VerdictKind::NecessaryConditionFails : VerdictKind::Inconclusive;
  return v;
}

BigInt kappa(const RootSystem& rs, bool has_zero_weight) {
  const BigInt n = rs.rank();
  switch (rs.type().family) {
    case Family::A: return (n + 1) * (n + 1) * (n + 1);
    case Family::B:
    case Family::C: return 2 * (n * n * n + n * n + n + 1) + 1;
    case Family::D: return rs.rank() == 4 ? BigInt(139) : BigInt(2 * n * n * n + 2 * n + 4);
    default: break;
  }
  const BigInt g = rs.group_dim();
  if (!has_zero_weight) return n * (g + 1);
  return n * (g + 1) * (g - n) / (g - 2 * n);
}

bool stable_witness_check(const RootSystem& rs, const std::vector<Weight>& witness) {
  for (std::size_t i = 0; i < witness.size(); ++i)
    for (std::size_t j = i + 1; j < witness.size(); ++j)
      if (rs.is_root(witness[i] - witness[j])) return false;
  // 0 interior to the hull <=> the witnesses positively span the whole space.
  std::vector<IntVector> gens;
  for (const auto& w : witness) gens.emplace_back(w.coords.begin(), w.coords.end());
  if (gens.empty() || rank(IntMatrix::from_rows(gens)) < rs.rank()) return false;
  for (const auto& g : gens) {
    IntVector neg = g;
    for (auto& x : neg) x = -x;
    if (!feasible_nonneg_combination(neg, gens)) return false;
  }
  return true;
}

}  // namespace purelie
