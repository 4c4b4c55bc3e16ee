#include "purelie/torus.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace purelie {

namespace {

using Small = std::vector<std::vector<std::int64_t>>;  // row-major copy of W

Small small_copy(const IntMatrix& w) {
  Small s(w.rows(), std::vector<std::int64_t>(w.cols()));
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0; c < w.cols(); ++c) {
      if (abs(w(r, c)) > 1'000'000) throw InvalidInput("torus weight entries must stay below 10^6 in size");
      s[r][c] = static_cast<std::int64_t>(w(r, c));
    }
  return s;
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// Keeps the inclusion-minimal sets, sorted.
std::vector<IndexSet> minimal_sets(std::set<IndexSet> sets) {
  std::vector<IndexSet> out;
  for (const auto& s : sets) {
    bool minimal = true;
    for (const auto& o : sets)
      if (o != s && is_subset(o, s)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  return out;
}

}  // namespace

TorusRep TorusRep::from_columns(const std::vector<std::vector<long long>>& cols, std::vector<std::string> names) {
  if (cols.empty()) throw InvalidInput("torus representation needs at least one coordinate");
  for (const auto& c : cols)
    if (c.size() != cols.front().size() || c.empty()) throw InvalidInput("weight columns must share a nonzero length");
  TorusRep t{IntMatrix::from_columns(cols), std::move(names)};
  if (!t.names.empty() && t.names.size() != cols.size()) throw InvalidInput("one name per coordinate");
  return t;
}

TorusRep TorusRep::parse(const std::string& text) {
  std::vector<std::vector<long long>> cols;
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      auto j = nlohmann::json::parse(text);
      cols = j.get<std::vector<std::vector<long long>>>();
    } catch (const std::exception& e) {
      throw InvalidInput(std::string("bad JSON weight matrix: ") + e.what());
    }
  } else {
    std::stringstream ss(text);
    std::string col;
    while (std::getline(ss, col, ';')) {
      std::vector<long long> c;
      std::stringstream cs(col);
      std::string item;
      while (std::getline(cs, item, ',')) {
        try {
          std::size_t used = 0;
          c.push_back(std::stoll(item, &used));
          if (item.find_first_not_of(" \t", used) != std::string::npos) throw InvalidInput("");
        } catch (const std::exception&) {
          throw InvalidInput("bad matrix entry '" + item + "'");
        }
      }
      cols.push_back(std::move(c));
    }
    // No ';' at all: a one-dimensional torus, one entry per coordinate.
    // (A single coordinate under a larger torus is never worth writing down.)
    if (cols.size() == 1 && cols[0].size() > 1) {
      std::vector<std::vector<long long>> row;
      for (auto v : cols[0]) row.push_back({v});
      cols = std::move(row);
    }
  }
  return from_columns(cols);
}

std::string TorusRep::name(std::size_t i) const { return names.empty() ? "x" + std::to_string(i + 1) : names[i]; }

TorusRep TorusRep::restrict(const IndexSet& coords) const {
  TorusRep t{weights.select_columns(coords), {}};
  if (!names.empty())
    for (auto i : coords) t.names.push_back(names[i]);
  return t;
}

IndexSet MonomialInvariant::support() const {
  IndexSet s;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > 0) s.push_back(i);
  return s;
}

std::vector<MonomialInvariant> hilbert_basis(const TorusRep& t, std::uint64_t cap) {
  // Contejean-Devie completion: grow candidates one unit at a time, only in
  // directions whose weight points back toward the origin.
  const Small w = small_copy(t.weights);
  const std::size_t d = t.torus_rank(), n = t.dim();
  using Vec = std::vector<std::int64_t>;
  auto image = [&](const Vec& u) {
    Vec y(d, 0);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < n; ++c) y[r] += w[r][c] * u[c];
    return y;
  };
  auto is_zero = [](const Vec& v) { return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }); };
  auto dominates = [&](const Vec& u, const Vec& b) {
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] < b[i]) return false;
    return true;
  };

  std::vector<Vec> basis;
  std::set<Vec> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    frontier.insert(e);
  }
  std::uint64_t generated = frontier.size();
  while (!frontier.empty()) {
    std::vector<Vec> open;
    for (const auto& u : frontier) {
      if (is_zero(image(u)))
        basis.push_back(u);
      else
        open.push_back(u);
    }
    std::set<Vec> next;
    for (const auto& u : open) {
      const Vec wu = image(u);
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t inner = 0;
        for (std::size_t r = 0; r < d; ++r) inner += wu[r] * w[r][j];
        if (inner >= 0) continue;
        Vec v = u;
        ++v[j];
        if (std::any_of(basis.begin(), basis.end(), [&](const Vec& b) { return dominates(v, b); })) continue;
        if (next.insert(v).second && ++generated > cap)
          throw CapExceeded("Hilbert basis completion exceeded cap " + std::to_string(cap));
      }
    }
    frontier = std::move(next);
  }
  std::vector<MonomialInvariant> out;
  for (const auto& b : basis) {
    bool minimal = std::none_of(basis.begin(), basis.end(), [&](const Vec& o) { return o != b && dominates(b, o); });
    if (minimal) out.push_back({b});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IndexSet stable_submodule(const TorusRep& t) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < t.dim(); ++i) gens.push_back(t.weights.column(i));
  IndexSet out;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    IntVector neg = gens[i];
    for (auto& x : neg) x = -x;
    if (feasible_nonneg_combination(neg, gens)) out.push_back(i);
  }
  return out;
}

bool is_stable(const TorusRep& t) { return stable_submodule(t).size() == t.dim(); }

std::vector<SSSComponent> sss_components(const TorusRep& t) {
  // Work in the row space of W: pick independent rows so every lambda outside
  // the kernel of the action is represented exactly once up to that kernel.
  const IndexSet rows = independent_rows(t.weights);
  const std::size_t r = rows.size();
  if (r == 0) return {};
  const IntMatrix wr = t.weights.select_rows(rows);
  const std::size_t n = t.dim();

  std::set<IntVector> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector c = wr.column(i);
    if (std::any_of(c.begin(), c.end(), [](const BigInt& x) { return x != 0; })) dirs.insert(make_primitive(c));
  }
  std::vector<IntVector> cols(dirs.begin(), dirs.end());

  std::map<IndexSet, IntVector> patterns;
  auto record = [&](const IntVector& mu) {
    IndexSet neg;
    for (std::size_t i = 0; i < n; ++i) {
      BigInt s = 0;
      for (std::size_t k = 0; k < r; ++k) s += mu[k] * wr(k, i);
      if (s < 0) neg.push_back(i);
    }
    IntVector lambda(t.torus_rank());
    for (std::size_t k = 0; k < r; ++k) lambda[rows[k]] = mu[k];
    patterns.emplace(neg, lambda);
  };

  const std::size_t k = r - 1;
  if (cols.size() >= k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::vector<IntVector> chosen;
      for (auto i : idx) chosen.push_back(cols[i]);
      if (auto normal = primitive_normal(chosen, r)) {
        record(*normal);
        IntVector opp = *normal;
        for (auto& x : opp) x = -x;
        record(opp);
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == cols.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::set<IndexSet> keys;
  for (const auto& [s, lam] : patterns) keys.insert(s);
  std::vector<SSSComponent> out;
  for (const auto& s : minimal_sets(keys)) out.push_back({s, patterns.at(s)});
  return out;
}

std::vector<IndexSet> sss_brute_force(const TorusRep& t, std::int64_t box) {
  if (box < 1) throw InvalidInput("box must be positive");
  const Small w = small_copy(t.weights);
  const std::size_t d = t.torus_rank(), n = t.dim();
  std::vector<std::int64_t> lambda(d, -box);
  std::set<IndexSet> patterns;
  for (;;) {
    IndexSet neg;
    bool acts = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) s += lambda[k] * w[k][i];
      if (s != 0) acts = true;
      if (s < 0) neg.push_back(i);
    }
    if (acts) patterns.insert(neg);
    std::size_t k = 0;
    while (k < d && lambda[k] == box) lambda[k++] = -box;
    if (k == d) break;
    ++lambda[k];
  }
  return minimal_sets(patterns);
}

std::size_t image_dim_of_divisor(const TorusRep& t, std::size_t i) {
  if (i >= t.dim()) throw InvalidInput("coordinate index out of range");
  return cone_dim(t.weights, {i});
}

std::size_t quotient_dim(const TorusRep& t) { return cone_dim(t.weights, {}); }

bool is_cartier(const std::vector<MonomialInvariant>& hb, std::size_t i) {
  return std::count_if(hb.begin(), hb.end(), [&](const auto& g) { return g.involves(i); }) == 1;
}

bool is_q_cartier(const std::vector<MonomialInvariant>& hb, std::size_t i) {
  // sqrt(p) = I for a monomial p in I exactly when supp(p) lies inside the
  // support of every generator of I; such a p exists iff one generator does.
  std::vector<IndexSet> supports;
  for (const auto& g : hb)
    if (g.involves(i)) supports.push_back(g.support());
  if (supports.empty()) return false;
  IndexSet common = supports.front();
  for (const auto& s : supports) {
    IndexSet next;
    std::set_intersection(common.begin(), common.end(), s.begin(), s.end(), std::back_inserter(next));
    common = std::move(next);
  }
  return std::any_of(supports.begin(), supports.end(), [&](const IndexSet& s) { return is_subset(s, common); });
}

namespace {

std::size_t generator_rank(const std::vector<MonomialInvariant>& gens) {
  if (gens.empty()) return 0;
  std::vector<IntVector> rows;
  for (const auto& g : gens) rows.emplace_back(g.exponents.begin(), g.exponents.end());
  return rank(IntMatrix::from_rows(rows));
}

bool split_node(FactorNode& node) {
  if (generator_rank(node.generators) <= 1) return node.accepted = true;
  for (std::size_t f = 0; f < node.generators.size(); ++f) {
    const IndexSet supp = node.generators[f].support();
    bool isolated = true;
    for (std::size_t g = 0; g < node.generators.size() && isolated; ++g) {
      if (g == f) continue;
      for (auto i : supp)
        if (node.generators[g].involves(i)) {
          isolated = false;
          break;
        }
    }
    if (!isolated) continue;
    FactorNode left{supp, {node.generators[f]}, true, {}};
    FactorNode right;
    std::set_difference(node.coords.begin(), node.coords.end(), supp.begin(), supp.end(),
                        std::back_inserter(right.coords));
    for (std::size_t g = 0; g < node.generators.size(); ++g)
      if (g != f) right.generators.push_back(node.generators[g]);
    const bool ok = split_node(right);
    node.children = {std::move(left), std::move(right)};
    return node.accepted = ok;
  }
  return node.accepted = false;
}

}  // namespace

std::pair<bool, FactorNode> split_recursively(std::size_t n, const std::vector<MonomialInvariant>& hb) {
  FactorNode root;
  root.coords.resize(n);
  std::iota(root.coords.begin(), root.coords.end(), 0);
  root.generators = hb;
  const bool ok = split_node(root);
  return {ok, std::move(root)};
}

std::pair<bool, FactorNode> cofree_by_recursion(const TorusRep& t, std::uint64_t cap) {
  if (!is_stable(t)) throw InvalidInput("cofree_by_recursion needs a stable representation");
  return split_recursively(t.dim(), hilbert_basis(t, cap));
}

TorusReport classify_torus(const TorusRep& t, bool reduce_to_stable, std::uint64_t cap) {
  TorusReport rep;
  rep.stable_submodule = stable_submodule(t);
  rep.stable = rep.stable_submodule.size() == t.dim();
  rep.hilbert_basis = hilbert_basis(t, cap);
  rep.quotient_dim = quotient_dim(t);
  rep.coregular = rep.hilbert_basis.size() == rep.quotient_dim;
  auto [rec_ok, tree] = split_recursively(t.dim(), rep.hilbert_basis);
  rep.cofree_by_recursion = rec_ok;
  rep.factorization_tree = std::move(tree);

  if (!rep.stable && !reduce_to_stable) {
    // Purity notions presuppose stability; cofreeness is read off V' = V/T data.
    rep.cofree = rec_ok;
    return rep;
  }
  rep.reduced_to_stable = !rep.stable;
  const IndexSet& sub = rep.stable_submodule;
  std::vector<SSSComponent> comps;
  if (!sub.empty()) {
    const TorusRep inner = t.restrict(sub);
    for (auto c : sss_components(inner)) {
      for (auto& i : c.zero_coords) i = sub[i];
      comps.push_back(std::move(c));
    }
  }
  bool pure = true, npure = true, cnpure = true;
  for (auto& c : comps) {
    ComponentInfo info{c, std::nullopt, std::nullopt, std::nullopt};
    if (c.zero_coords.size() != 1) {
      pure = false;
    } else {
      const std::size_t i = c.zero_coords.front();
      info.image_dim = image_dim_of_divisor(t, i);
      info.cartier = is_cartier(rep.hilbert_basis, i);
      info.q_cartier = is_q_cartier(rep.hilbert_basis, i);
      if (*info.image_dim + 1 != rep.quotient_dim) npure = false;
      if (!*info.cartier) cnpure = false;
    }
    rep.components.push_back(std::move(info));
  }
  npure = npure && pure;
  cnpure = cnpure && npure;
  rep.pure = pure;
  rep.npure = npure;
  rep.cnpure = cnpure;
  rep.cofree = cnpure;
  return rep;
}

}  // namespace purelie
