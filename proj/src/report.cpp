#include "purelie/report.hpp"

#include <limits>
#include <sstream>

namespace purelie {

using nlohmann::json;

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "tsv") return Format::Tsv;
  if (text == "text") return Format::Text;
  throw InvalidInput("unknown format '" + text + "'");
}

json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

namespace {

json vec_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(bigint_json(x));
  return a;
}

json tree_json(const TorusRep& t, const FactorNode& node) {
  json coords = json::array(), gens = json::array(), kids = json::array();
  for (auto i : node.coords) coords.push_back(i);
  for (const auto& g : node.generators) gens.push_back(g.exponents);
  for (const auto& c : node.children) kids.push_back(tree_json(t, c));
  return {{"coords", coords}, {"generators", gens}, {"accepted", node.accepted}, {"children", kids}};
}

json opt(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat_row(const json& v) {
  if (!v.is_object()) return false;
  for (const auto& [k, x] : v.items())
    if (x.is_object() || (x.is_array() && !x.empty() && x[0].is_structured())) return false;
  return true;
}

// Leaves as "a.b.0.c<TAB>value", arrays of scalars kept whole.
void flatten(const json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array() && !v.empty() && v[0].is_structured()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "." + std::to_string(i), out);
  } else {
    out.emplace_back(path, scalar_text(v));
  }
}

std::string render_table(const json& rows, const std::vector<std::string>& cols, char sep, bool align) {
  std::vector<std::vector<std::string>> cells{cols};
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (const auto& c : cols) line.push_back(r.contains(c) ? scalar_text(r[c]) : "");
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(cols.size(), 0);
  if (align)
    for (const auto& line : cells)
      for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream os;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) os << sep;
      os << line[i];
      if (align && i + 1 < line.size()) os << std::string(width[i] - line[i].size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

json enumeration_json(const RootSystem& rs, const std::vector<SmallEnoughEntry>& entries) {
  json rows = json::array();
  for (const auto& e : entries) {
    rows.push_back({{"weight", format_weight(e.lambda)},
                    {"omega", omega_notation(e.lambda)},
                    {"dim", bigint_json(e.dim)},
                    {"support", e.support},
                    {"width", e.width},
                    {"verdict", to_string(e.verdict)},
                    {"reference", e.reference_tag},
                    {"certificate", e.certificate.describe()}});
  }
  return {{"type", rs.type().name()},
          {"kappa", bigint_json(kappa(rs, false))},
          {"kappa_zero_weight", bigint_json(kappa(rs, true))},
          {"count", entries.size()},
          {"entries", rows}};
}

json verdict_json(const RepSpec& spec, const PurityVerdict& v) {
  json offenders = json::array();
  for (const auto& [cls, dim] : v.offending_classes)
    offenders.push_back({{"class", format_class(cls)}, {"residues", cls.residues}, {"fixed_dim", dim}});
  json j{{"representation", spec.describe()},
         {"verdict", to_string(v.kind)},
         {"bound", bigint_json(v.bound)},
         {"classes_checked", v.classes_checked},
         {"offending_classes", offenders},
         {"order", v.order_used ? json(*v.order_used) : json(nullptr)},
         {"max_non_offending", v.max_non_offending ? json(*v.max_non_offending) : json(nullptr)}};
  if (v.hyperplane) j["hyperplane"] = {{"max_count", v.hyperplane->max_count}, {"normal", vec_json(v.hyperplane->normal)}};
  return j;
}

json torus_json(const TorusRep& t, const TorusReport& r) {
  json weights = json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) weights.push_back(vec_json(t.weights.column(i)));
  json hb = json::array(), comps = json::array(), details = json::array();
  for (const auto& m : r.hilbert_basis) hb.push_back(m.exponents);
  for (const auto& c : r.components) {
    comps.push_back(c.component.zero_coords);
    json d{{"zero_coords", c.component.zero_coords}, {"witness_lambda", vec_json(c.component.witness_lambda)}};
    d["image_dim"] = c.image_dim ? json(*c.image_dim) : json(nullptr);
    d["cartier"] = opt(c.cartier);
    d["q_cartier"] = opt(c.q_cartier);
    details.push_back(std::move(d));
  }
  return {{"weights", weights},
          {"stable", r.stable},
          {"stable_submodule", r.stable_submodule},
          {"reduced_to_stable", r.reduced_to_stable},
          {"hilbert_basis", hb},
          {"quotient_dim", r.quotient_dim},
          {"components", comps},
          {"component_details", details},
          {"pure", opt(r.pure)},
          {"npure", opt(r.npure)},
          {"cnpure", opt(r.cnpure)},
          {"coregular", r.coregular},
          {"cofree", r.cofree},
          {"cofree_by_recursion", r.cofree_by_recursion},
          {"factorization_tree", tree_json(t, r.factorization_tree)}};
}

std::string render(const json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";

  const bool tabular = report.contains("entries") && report["entries"].is_array() &&
                       std::all_of(report["entries"].begin(), report["entries"].end(), is_flat_row);
  if (tabular) {
    static const std::vector<std::string> cols{"omega", "weight", "dim", "support", "width",
                                               "verdict", "reference", "certificate"};
    std::string head;
    for (const auto& [k, v] : report.items())
      if (k != "entries") head += (format == Format::Tsv ? "# " : "") + k + ": " + scalar_text(v) + "\n";
    return head + render_table(report["entries"], cols, format == Format::Tsv ? '\t' : ' ', format == Format::Text);
  }

  std::vector<std::pair<std::string, std::string>> leaves;
  flatten(report, "", leaves);
  std::ostringstream os;
  std::size_t w = 0;
  for (const auto& [k, v] : leaves) w = std::max(w, k.size());
  for (const auto& [k, v] : leaves) {
    if (format == Format::Tsv)
      os << k << '\t' << v << '\n';
    else
      os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
  }
  return os.str();
}

}  // namespace purelie
