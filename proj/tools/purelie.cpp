#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "purelie/report.hpp"
#include "purelie/repro.hpp"

using namespace purelie;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInconclusive = 1, kUsage = 2, kCap = 3 };

struct Sink {
  std::string path;
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << text;
  }
};

const RootSystem& type_from(const std::string& family, int rank) {
  if (family.size() != 1) throw InvalidInput("family must be one of A..G");
  return root_system(SimpleType::make(static_cast<Family>(std::toupper(family[0])), rank));
}

json bundle_json(const std::string& id, const std::vector<CheckResult>& checks) {
  json rows = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    rows.push_back({{"name", c.name}, {"passed", c.passed}, {"documented_exception", c.documented_exception},
                    {"detail", c.detail}});
    ok &= c.passed || c.documented_exception;
  }
  return {{"bundle", id}, {"passed", ok}, {"checks", rows}};
}

std::string bundle_text(const std::vector<CheckResult>& checks, char sep) {
  std::string s;
  for (const auto& c : checks) {
    s += c.documented_exception ? "NOTE" : c.passed ? "PASS" : "FAIL";
    s += sep + c.name;
    if (!c.detail.empty()) s += sep + (sep == '\t' ? c.detail : "(" + c.detail + ")");
    s += '\n';
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Purity and cofreeness checks for simple-group and torus representations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text", out_path;
  std::uint64_t cap_toral = kDefaultToralCap, cap_hyper = kDefaultHyperplaneCap, cap_hilbert = kDefaultHilbertCap;
  app.add_option("--format", format, "json, tsv or text")->check(CLI::IsMember({"json", "tsv", "text"}));
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--cap-toral", cap_toral, "max toral classes")->check(CLI::PositiveNumber);
  app.add_option("--cap-hyperplane", cap_hyper, "max weight subsets for hyperplane counts")->check(CLI::PositiveNumber);
  app.add_option("--cap-hilbert", cap_hilbert, "max candidates in Hilbert basis completion")->check(CLI::PositiveNumber);

  auto* simple = app.add_subcommand("simple", "irreducible representations of simple groups");
  simple->require_subcommand(1);

  std::string family, weight_text, reference_path;
  int rank = 0;
  bool certify = false, strict = false, hyperplane = false, exact_order = false;
  std::vector<std::int64_t> orders;

  auto* enumerate = simple->add_subcommand("enumerate", "list small enough highest weights with verdicts");
  enumerate->add_option("family", family)->required();
  enumerate->add_option("rank", rank)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--certify", certify, "re-derive impurity of Impure and unlisted entries");
  enumerate->add_flag("--strict", strict, "fail if an entry is missing from the reference data");
  enumerate->add_option("--reference", reference_path, "reference verdict file");

  auto* cert = simple->add_subcommand("certify", "toral or hyperplane impurity check for one weight");
  cert->add_option("family", family)->required();
  cert->add_option("rank", rank)->required()->check(CLI::PositiveNumber);
  cert->add_option("--weight", weight_text, "highest weight a1,a2,... in fundamental coordinates")->required();
  auto* order_opt = cert->add_option("--order", orders, "toral element order(s)")->check(CLI::Range(2, 1000));
  auto* hyper_opt = cert->add_flag("--hyperplane", hyperplane, "hyperplane weight count");
  cert->add_flag("--exact-order", exact_order, "only classes of exact order");
  order_opt->excludes(hyper_opt);

  auto* torus = app.add_subcommand("torus", "torus representations");
  torus->require_subcommand(1);
  std::string matrix;
  bool reduce = false;
  auto* classify = torus->add_subcommand("classify", "decide stable/pure/npure/cnpure/coregular/cofree");
  classify->add_option("weights", matrix, "columns separated by ';', entries by ',' (or JSON)")->required();
  classify->add_flag("--reduce-stable", reduce, "pass to the stable submodule first");

  std::string bundle;
  int bundle_n = 0;
  auto* reproduce = app.add_subcommand("reproduce", "run a bundled reproduction check");
  reproduce->add_option("id", bundle)->required()->check(CLI::IsMember(bundle_ids()));
  reproduce->add_option("--n", bundle_n, "group parameter (SL_n, Sp_2n, Spin_2n+1, Spin_2n)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const Format fmt = parse_format(format);
  const Sink sink{out_path};
  const CertifyOptions caps{cap_toral, cap_hyper};

  try {
    if (*enumerate) {
      const auto& rs = type_from(family, rank);
      const auto refs = reference_path.empty() ? ReferenceVerdicts::load_default() : ReferenceVerdicts::load(reference_path);
      auto entries = attach_verdicts(rs, enumerate_small_enough(rs), refs, certify, strict, caps);
      sink.write(render(enumeration_json(rs, entries), fmt));
      return kOk;
    }
    if (*cert) {
      const auto& rs = type_from(family, rank);
      const Weight lambda = parse_weight(weight_text);
      if (lambda.size() != rs.rank()) throw InvalidInput("weight needs " + std::to_string(rs.rank()) + " coordinates");
      if (!lambda.is_dominant()) throw InvalidInput("weight must be dominant");
      if (!hyperplane && orders.empty()) throw InvalidInput("give --order or --hyperplane");
      const RepSpec spec = RepSpec::irreducible(rs, lambda);
      std::vector<PurityVerdict> verdicts;
      if (hyperplane)
        verdicts.push_back(hyperplane_necessity_check(spec, cap_hyper));
      else
        for (auto l : orders) verdicts.push_back(toral_impurity_check(spec, l, exact_order, cap_toral));
      bool decided = false;
      json j;
      if (verdicts.size() == 1) {
        j = verdict_json(spec, verdicts[0]);
      } else {
        j = json::array();
        for (const auto& v : verdicts) j.push_back(verdict_json(spec, v));
        j = {{"checks", j}};
      }
      for (const auto& v : verdicts) decided |= v.kind != VerdictKind::Inconclusive;
      sink.write(render(j, fmt));
      return decided ? kOk : kInconclusive;
    }
    if (*classify) {
      const auto t = TorusRep::parse(matrix);
      sink.write(render(torus_json(t, classify_torus(t, reduce, cap_hilbert)), fmt));
      return kOk;
    }
    if (*reproduce) {
      BundleOptions opt;
      if (bundle_n > 0) opt.n = bundle_n;
      opt.caps = caps;
      opt.hilbert_cap = cap_hilbert;
      const auto checks = run_bundle(bundle, opt);
      const json j = bundle_json(bundle, checks);
      sink.write(fmt == Format::Json ? render(j, fmt) : bundle_text(checks, fmt == Format::Tsv ? '\t' : ' '));
      return j["passed"].get<bool>() ? kOk : kInconclusive;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
