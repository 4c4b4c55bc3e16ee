#include "purelie/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace purelie {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Cofree: return "Cofree";
    case Verdict::Impure: return "Impure";
    case Verdict::Unstable: return "Unstable";
    case Verdict::NeedsRefinedAnalysis: return "NeedsRefinedAnalysis";
    case Verdict::Unlisted: return "Unlisted";
  }
  return "?";
}

Verdict parse_verdict(const std::string& text) {
  for (auto v : {Verdict::Cofree, Verdict::Impure, Verdict::Unstable, Verdict::NeedsRefinedAnalysis})
    if (to_string(v) == text) return v;
  throw InvalidInput("unknown verdict '" + text + "'");
}

std::string Certificate::describe() const {
  switch (kind) {
    case Kind::NotAttempted: return "none";
    case Kind::Toral: return "toral-" + std::to_string(order);
    case Kind::Hyperplane: return "hyperplane";
    case Kind::NeedsRefinedAnalysis: return "needs-refined-analysis";
  }
  return "?";
}

namespace {

// "3", "3..5", "3..", each optionally followed by ":even" / ":odd".
void parse_n_range(const std::string& field, ReferenceRow& row) {
  std::string body = field;
  auto colon = body.find(':');
  if (colon != std::string::npos) {
    const std::string p = body.substr(colon + 1);
    if (p == "even")
      row.parity = ReferenceRow::Parity::Even;
    else if (p == "odd")
      row.parity = ReferenceRow::Parity::Odd;
    else
      throw InvalidInput("bad parity '" + p + "'");
    body = body.substr(0, colon);
  }
  static const std::regex re(R"((\d+)(\.\.(\d*))?)");
  std::smatch m;
  if (!std::regex_match(body, m, re)) throw InvalidInput("bad range '" + field + "'");
  row.n_lo = std::stoi(m[1]);
  if (!m[2].matched)
    row.n_hi = row.n_lo;
  else
    row.n_hi = m[3].length() ? std::stoi(m[3]) : -1;
}

int group_parameter(const RootSystem& rs) {
  return rs.type().family == Family::A ? rs.type().rank + 1 : rs.type().rank;
}

bool row_admits(const ReferenceRow& row, const RootSystem& rs) {
  if (row.family != rs.type().family) return false;
  const int n = group_parameter(rs);
  if (n < row.n_lo || (row.n_hi >= 0 && n > row.n_hi)) return false;
  if (row.parity == ReferenceRow::Parity::Even && n % 2 != 0) return false;
  if (row.parity == ReferenceRow::Parity::Odd && n % 2 == 0) return false;
  return true;
}

// Expands one alternative at parameter n and coefficient k; none if an index is missing.
std::optional<Weight> expand(const std::string& alt, int n, int k, std::size_t rank) {
  static const std::regex term_re(R"((k|\d+)?w(\d+|\{n(-\d+)?\}))");
  Weight w(rank);
  std::stringstream ss(alt);
  std::string term;
  while (std::getline(ss, term, '+')) {
    std::smatch m;
    if (!std::regex_match(term, m, term_re)) throw InvalidInput("bad weight term '" + term + "'");
    std::int64_t coeff = 1;
    if (m[1].matched) coeff = m[1] == "k" ? k : std::stoll(m[1]);
    long idx;
    const std::string ix = m[2];
    if (ix[0] == '{')
      idx = n + (m[3].matched ? std::stol(m[3]) : 0);
    else
      idx = std::stol(ix);
    if (idx < 1 || static_cast<std::size_t>(idx) > rank) return std::nullopt;
    w[static_cast<std::size_t>(idx - 1)] += coeff;
  }
  return w;
}

}  // namespace

ReferenceVerdicts ReferenceVerdicts::parse(const std::string& text) {
  ReferenceVerdicts refs;
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::stringstream ls(line);
    std::vector<std::string> f;
    for (std::string tok; ls >> tok;) f.push_back(tok);
    if (f.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw InvalidInput("reference data line " + std::to_string(lineno) + ": " + why);
    };
    if (f.size() != 6) fail("expected 6 fields");
    if (f[0].size() != 1 || std::string("ABCDEFG").find(f[0][0]) == std::string::npos) fail("bad family");
    ReferenceRow row;
    row.line = lineno;
    row.family = static_cast<Family>(f[0][0]);
    try {
      parse_n_range(f[1], row);
      if (f[2] != "-") {
        ReferenceRow tmp;
        parse_n_range(f[2], tmp);
        if (tmp.n_hi < 0) fail("k-range must be bounded");
        row.k_lo = tmp.n_lo;
        row.k_hi = tmp.n_hi;
      }
      row.verdict = parse_verdict(f[4]);
      // Validate the pattern syntax once, at a generous size.
      std::stringstream alts(f[3]);
      for (std::string alt; std::getline(alts, alt, '|');) expand(alt, 100, 1, 200);
    } catch (const InvalidInput& e) {
      fail(e.what());
    }
    if ((f[3].find('k') != std::string::npos) != (row.k_hi > 0)) fail("k used without a k-range or vice versa");
    row.weights = f[3];
    row.source = f[5];
    refs.rows_.push_back(std::move(row));
  }
  return refs;
}

ReferenceVerdicts ReferenceVerdicts::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open reference data '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

ReferenceVerdicts ReferenceVerdicts::load_default() {
  const char* env = std::getenv("PURELIE_DATA_DIR");
  const std::string dir = env ? env : PURELIE_DATA_DIR;
  return load(dir + "/reference_verdicts.txt");
}

std::map<Weight, ReferenceVerdicts::Match> ReferenceVerdicts::for_type(const RootSystem& rs) const {
  std::map<Weight, Match> out;
  const int n = group_parameter(rs);
  for (const auto& row : rows_) {
    if (!row_admits(row, rs)) continue;
    const int k_lo = row.k_hi > 0 ? row.k_lo : 0, k_hi = row.k_hi > 0 ? row.k_hi : 0;
    for (int k = k_lo; k <= k_hi; ++k) {
      std::stringstream alts(row.weights);
      for (std::string alt; std::getline(alts, alt, '|');) {
        auto w = expand(alt, n, k, rs.rank());
        if (!w || w->is_zero()) continue;
        const Weight c = rs.outer_canonical(*w);
        auto [it, fresh] = out.emplace(c, Match{row.verdict, row.source});
        if (!fresh && it->second.verdict != row.verdict)
          throw InvalidInput("reference rows disagree on " + rs.type().name() + " " + omega_notation(c) + " (line " +
                             std::to_string(row.line) + ")");
      }
    }
  }
  return out;
}

std::vector<SmallEnoughEntry> enumerate_small_enough(const RootSystem& rs) {
  // weyl_dim grows strictly in every coordinate, so the small-enough set is
  // closed under lowering coordinates and a pruned BFS from 0 reaches all of it.
  // For exceptional types prune with the larger (zero-weight) bound, filter after.
  const bool exceptional = !rs.type().classical();
  const BigInt prune = kappa(rs, true);
  const Weight zero(rs.rank());
  std::set<Weight> seen{zero};
  std::vector<Weight> frontier{zero}, found;
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        Weight v = w;
        ++v[i];
        if (!seen.insert(v).second) continue;
        if (weyl_dim(rs, v) > prune) continue;
        next.push_back(v);
        found.push_back(v);
      }
    frontier = std::move(next);
  }
  std::map<Weight, SmallEnoughEntry> canon;
  for (const auto& w : found) {
    const BigInt dim = weyl_dim(rs, w);
    if (exceptional && dim > kappa(rs, rs.in_root_lattice(w))) continue;
    const Weight c = rs.outer_canonical(w);
    if (canon.count(c)) continue;
    SmallEnoughEntry e;
    e.lambda = c;
    e.dim = dim;
    e.support = c.support();
    e.width = c.width();
    canon.emplace(c, std::move(e));
  }
  std::vector<SmallEnoughEntry> out;
  for (auto& [w, e] : canon) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.lambda < b.lambda;
  });
  return out;
}

Certificate certify_impurity(const RootSystem& rs, const Weight& lambda, const CertifyOptions& options) {
  const RepSpec spec = RepSpec::irreducible(rs, lambda);
  for (std::int64_t order : {2, 3}) {
    try {
      if (toral_impurity_check(spec, order, false, options.toral_cap).kind == VerdictKind::CertifiedImpure)
        return {Certificate::Kind::Toral, order};
    } catch (const CapExceeded&) {
    }
  }
  try {
    if (hyperplane_necessity_check(spec, options.hyperplane_cap).kind == VerdictKind::NecessaryConditionFails)
      return {Certificate::Kind::Hyperplane, 0};
  } catch (const CapExceeded&) {
  }
  return {Certificate::Kind::NeedsRefinedAnalysis, 0};
}

std::vector<SmallEnoughEntry> attach_verdicts(const RootSystem& rs, std::vector<SmallEnoughEntry> entries,
                                              const ReferenceVerdicts& refs, bool certify, bool strict,
                                              const CertifyOptions& options) {
  const auto table = refs.for_type(rs);
  std::vector<std::string> missing;
  for (auto& e : entries) {
    auto it = table.find(e.lambda);
    if (it == table.end()) {
      e.verdict = Verdict::Unlisted;
      e.reference_tag.clear();
      missing.push_back(omega_notation(e.lambda));
    } else {
      e.verdict = it->second.verdict;
      e.reference_tag = it->second.source;
    }
  }
  if (strict && !missing.empty()) {
    std::string msg = rs.type().name() + ": not in reference data:";
    for (const auto& m : missing) msg += " " + m;
    throw InvalidInput(msg);
  }
  if (certify) {
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i].verdict == Verdict::Impure || entries[i].verdict == Verdict::Unlisted) todo.push_back(i);
    // toral_impurity_check parallelizes internally; keep this loop sequential.
    for (auto i : todo) entries[i].certificate = certify_impurity(rs, entries[i].lambda, options);
  }
  return entries;
}

Weight shift(const Weight& w, std::size_t i, std::size_t j) {
  if (i >= w.size() || j >= w.size()) throw InvalidInput("shift index out of range");
  if (i == j) throw InvalidInput("shift needs distinct indices");
  if (w[i] == 0) throw InvalidInput("shift source coefficient is zero");
  Weight out = w;
  out[j] += out[i];
  out[i] = 0;
  return out;
}

}  // namespace purelie
