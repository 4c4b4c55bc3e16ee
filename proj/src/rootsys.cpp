#include "purelie/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace purelie {

SimpleType SimpleType::make(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw InvalidInput("invalid rank " + std::to_string(rank) + " for family " + char(family));
  return SimpleType{family, rank};
}

SimpleType SimpleType::parse(const std::string& text) {
  if (text.size() < 2 || std::string("ABCDEFG").find(text[0]) == std::string::npos)
    throw InvalidInput("bad type string '" + text + "'");
  int r = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw InvalidInput("bad type string '" + text + "'");
    r = r * 10 + (text[i] - '0');
    if (r > 1000) throw InvalidInput("rank too large in '" + text + "'");
  }
  return make(static_cast<Family>(text[0]), r);
}

std::string SimpleType::name() const { return std::string(1, char(family)) + std::to_string(rank); }

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](auto x) { return x == 0; });
}
bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](auto x) { return x >= 0; });
}
std::int64_t Weight::width() const { return std::accumulate(coords.begin(), coords.end(), std::int64_t{0}); }
std::size_t Weight::support() const {
  return static_cast<std::size_t>(std::count_if(coords.begin(), coords.end(), [](auto x) { return x != 0; }));
}
Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < size(); ++i) r[i] += o[i];
  return r;
}
Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < size(); ++i) r[i] -= o[i];
  return r;
}
Weight Weight::operator-() const { return scaled(-1); }
Weight Weight::scaled(std::int64_t k) const {
  Weight r = *this;
  for (auto& x : r.coords) x *= k;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << '(' << format_weight(w) << ')'; }

std::string format_weight(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

Weight parse_weight(const std::string& text) {
  Weight w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw InvalidInput("");
      w.coords.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("bad weight '" + text + "'");
    }
  }
  if (w.coords.empty()) throw InvalidInput("empty weight");
  return w;
}

std::string omega_notation(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!s.empty()) s += '+';
    if (w[i] != 1) s += std::to_string(w[i]);
    s += "w" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

namespace {

// Gram matrix of the simple roots, Bourbaki numbering, short roots of squared length 2.
std::vector<std::vector<std::int64_t>> gram_matrix(SimpleType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  std::vector<std::vector<std::int64_t>> b(n, std::vector<std::int64_t>(n, 0));
  auto link = [&](std::size_t i, std::size_t j, std::int64_t v) { b[i][j] = b[j][i] = v; };
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) b[i][i] = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (std::size_t i = 0; i < n; ++i) b[i][i] = i + 1 < n ? 4 : 2;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (std::size_t i = 0; i < n; ++i) b[i][i] = i + 1 < n ? 2 : 4;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, i + 2 < n ? -1 : -2);
      break;
    case Family::D:
      for (std::size_t i = 0; i < n; ++i) b[i][i] = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (std::size_t i = 0; i < n; ++i) b[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      b = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    case Family::G:
      b = {{2, -3}, {-3, 6}};
      break;
  }
  return b;
}

}  // namespace

RootSystem::RootSystem(SimpleType type) : type_(type), rank_(static_cast<std::size_t>(type.rank)) {
  SimpleType::make(type.family, type.rank);
  auto b = gram_matrix(type);
  const std::size_t n = rank_;
  cartan_.assign(n, std::vector<std::int64_t>(n));
  half_length_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    half_length_[i] = b[i][i] / 2;
    for (std::size_t j = 0; j < n; ++j) cartan_[i][j] = 2 * b[i][j] / b[i][i];
  }

  // Close the simple roots under simple reflections, in simple-root coordinates.
  auto pairing = [&](const std::vector<std::int64_t>& c, std::size_t i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += cartan_[i][j] * c[j];
    return s;
  };
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      auto r = c;
      r[i] -= pairing(c, i);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  std::vector<std::vector<std::int64_t>> pos;
  for (const auto& c : seen)
    if (std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; })) pos.push_back(c);
  std::sort(pos.begin(), pos.end(), [](const auto& x, const auto& y) {
    auto hx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    auto hy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    return hx != hy ? hx < hy : x > y;
  });
  for (const auto& c : pos) {
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = pairing(c, i);
    positive_roots_.push_back(w);
    positive_root_coords_.push_back(c);
    all_roots_sorted_.push_back(w);
    all_roots_sorted_.push_back(-w);
  }
  std::sort(all_roots_sorted_.begin(), all_roots_sorted_.end());
  group_dim_ = static_cast<std::int64_t>(n + 2 * pos.size());

  // Inverse Cartan as det * C^{-1}, via exact Gauss-Jordan.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = cartan_[i][j];
    aug[i][n + i] = 1;
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    if (p != c) {
      std::swap(aug[p], aug[c]);
      det = -det;
    }
    det *= aug[c][c];
    Rational piv = aug[c][c];
    for (auto& x : aug[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  det_ = boost::multiprecision::numerator(det);
  adjugate_.assign(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = aug[i][n + j] * det;
      adjugate_[i][j] = boost::multiprecision::numerator(v);
    }
}

void RootSystem::check_index(std::size_t i) const {
  if (i >= rank_) throw InvalidInput("simple root index out of range");
}

void RootSystem::check_rank(const Weight& w) const {
  if (w.size() != rank_)
    throw InvalidInput("weight " + format_weight(w) + " has wrong length for " + type_.name());
}

Weight RootSystem::simple_root(std::size_t i) const {
  check_index(i);
  Weight w(rank_);
  for (std::size_t k = 0; k < rank_; ++k) w[k] = cartan_[k][i];
  return w;
}

bool RootSystem::is_root(const Weight& w) const {
  return std::binary_search(all_roots_sorted_.begin(), all_roots_sorted_.end(), w);
}

Weight RootSystem::simple_reflection(std::size_t i, const Weight& w) const {
  check_index(i);
  check_rank(w);
  Weight r = w;
  const std::int64_t a = w[i];
  if (a == 0) return r;
  for (std::size_t k = 0; k < rank_; ++k) r[k] -= a * cartan_[k][i];
  return r;
}

Weight RootSystem::dominant_representative(const Weight& w) const {
  check_rank(w);
  Weight r = w;
  for (;;) {
    std::size_t i = 0;
    while (i < rank_ && r[i] >= 0) ++i;
    if (i == rank_) return r;
    const std::int64_t a = r[i];
    for (std::size_t k = 0; k < rank_; ++k) r[k] -= a * cartan_[k][i];
  }
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
  // Walk down from the dominant element; each reflection at a positive coordinate
  // strictly lowers the weight, so every orbit element is reached.
  Weight top = dominant_representative(w);
  std::set<Weight> seen{top};
  std::vector<Weight> stack{top};
  while (!stack.empty()) {
    Weight x = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < rank_; ++i) {
      if (x[i] <= 0) continue;
      Weight y = simple_reflection(i, x);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<std::vector<std::int64_t>> RootSystem::root_coords(const Weight& w) const {
  check_rank(w);
  std::vector<std::int64_t> c(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < rank_; ++j) s += adjugate_[i][j] * w[j];
    if (s % det_ != 0) return std::nullopt;
    c[i] = static_cast<std::int64_t>(s / det_);
  }
  return c;
}

std::int64_t RootSystem::pair_with_root_coords(const Weight& x, const std::vector<std::int64_t>& beta) const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < rank_; ++k) s += beta[k] * x[k] * half_length_[k];
  return s;
}

Weight RootSystem::dual_weight(const Weight& lambda) const {
  check_rank(lambda);
  if (!lambda.is_dominant()) throw InvalidInput("dual_weight needs a dominant weight");
  return dominant_representative(-lambda);
}

std::vector<Weight> RootSystem::outer_images(const Weight& lambda) const {
  check_rank(lambda);
  using Perm = std::vector<std::size_t>;
  std::vector<Perm> gens;
  Perm id(rank_);
  std::iota(id.begin(), id.end(), 0);
  if (type_.family == Family::A) gens.push_back(Perm(id.rbegin(), id.rend()));
  if (type_.family == Family::E && rank_ == 6) gens.push_back({5, 1, 4, 3, 2, 0});
  if (type_.family == Family::D) {
    Perm swap = id;
    std::swap(swap[rank_ - 2], swap[rank_ - 1]);
    gens.push_back(swap);
    if (rank_ == 4) gens.push_back({2, 1, 0, 3});
  }
  std::set<Weight> seen{lambda};
  std::vector<Weight> stack{lambda};
  while (!stack.empty()) {
    Weight x = stack.back();
    stack.pop_back();
    for (const auto& p : gens) {
      Weight y(rank_);
      for (std::size_t i = 0; i < rank_; ++i) y[p[i]] = x[i];
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

Weight RootSystem::outer_canonical(const Weight& lambda) const {
  if (!lambda.is_dominant()) throw InvalidInput("outer_canonical needs a dominant weight");
  return outer_images(lambda).back();
}

Weight RootSystem::from_orthogonal(const std::vector<Rational>& c) const {
  const std::size_t n = rank_;
  if (!type_.classical() || type_.family == Family::A || c.size() != n)
    throw InvalidInput("orthogonal coordinates need type B, C or D and rank-many entries");
  std::vector<Rational> a(n);
  for (std::size_t i = 0; i + 1 < n; ++i) a[i] = c[i] - c[i + 1];
  switch (type_.family) {
    case Family::B: a[n - 1] = 2 * c[n - 1]; break;
    case Family::C: a[n - 1] = c[n - 1]; break;
    default:
      a[n - 2] = c[n - 2] - c[n - 1];
      a[n - 1] = c[n - 2] + c[n - 1];
  }
  Weight w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (boost::multiprecision::denominator(a[i]) != 1) throw InvalidInput("not an integral weight");
    w[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(a[i]));
  }
  return w;
}

const RootSystem& root_system(SimpleType type) {
  static std::mutex mu;
  static std::map<SimpleType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[type];
  if (!slot) slot = std::make_unique<RootSystem>(type);
  return *slot;
}

}  // namespace purelie
