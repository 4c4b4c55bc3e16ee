#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"
#include "purelie/report.hpp"
#include "purelie/repro.hpp"

using namespace purelie;
using nlohmann::json;

namespace {

const RootSystem& rs(const char* name) { return root_system(SimpleType::parse(name)); }

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& x : j)
      if (has_float(x)) return true;
  return false;
}

void round_trips(const json& j) {
  const std::string once = render(j, Format::Json);
  CHECK(render(json::parse(once), Format::Json) == once);
  CHECK_FALSE(has_float(j));
}

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
  const std::string path = "/tmp/purelie_cli_test_" + std::to_string(::getpid()) + ".out";
  const std::string cmd = env + " " + std::string(PURELIE_CLI) + " " + args + " > " + path + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(path.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

}  // namespace

TEST_CASE("reports serialize canonically") {
  const auto refs = ReferenceVerdicts::load_default();
  round_trips(enumeration_json(rs("A5"), attach_verdicts(rs("A5"), enumerate_small_enough(rs("A5")), refs, true)));
  round_trips(verdict_json(RepSpec::irreducible(rs("G2"), Weight{2, 0}),
                           toral_impurity_check(RepSpec::irreducible(rs("G2"), Weight{2, 0}), 3)));
  round_trips(verdict_json(RepSpec::irreducible(rs("A4"), Weight{1, 1, 0, 0}),
                           hyperplane_necessity_check(RepSpec::irreducible(rs("A4"), Weight{1, 1, 0, 0}))));
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = oracle::random_torus(2, 4, -2, 2);
    round_trips(torus_json(t, classify_torus(t, true)));
  }
  CHECK(bigint_json(BigInt(1) << 80).is_string());
  CHECK(bigint_json(BigInt(-5)) == -5);
}

TEST_CASE("torus report fields") {
  const auto t = TorusRep::parse("2,0;0,1;-2,-1;-1,0;-1,0");
  const auto j = torus_json(t, classify_torus(t, false));
  for (const char* k : {"stable", "pure", "npure", "cnpure", "coregular", "cofree", "hilbert_basis", "components",
                        "factorization_tree"})
    CHECK(j.contains(k));
  CHECK(j["components"] == json::parse("[[0],[1],[2]]"));
  CHECK(j["pure"] == true);
}

TEST_CASE("tsv and text renderings") {
  const auto j = enumeration_json(rs("G2"), enumerate_small_enough(rs("G2")));
  const auto tsv = render(j, Format::Tsv);
  CHECK(tsv.find("omega\tweight\tdim") != std::string::npos);
  CHECK(tsv.find("2w1\t2,0\t27") != std::string::npos);
  const auto text = render(verdict_json(RepSpec::irreducible(rs("G2"), Weight{2, 0}),
                                        toral_impurity_check(RepSpec::irreducible(rs("G2"), Weight{2, 0}), 3)),
                           Format::Text);
  CHECK(text.find("CertifiedImpure") != std::string::npos);
  CHECK(parse_format("tsv") == Format::Tsv);
  CHECK_THROWS_AS(parse_format("xml"), InvalidInput);
}

TEST_CASE("bundles") {
  CHECK(bundle_ids().size() == 10);
  CHECK_THROWS_AS(run_bundle("nope"), InvalidInput);
  for (const auto& c : run_bundle("spin15-witness")) CHECK(c.passed);
  for (const auto& c : run_bundle("spin17")) CHECK(c.passed);
  for (const auto& c : run_bundle("spin18")) CHECK(c.passed);
  for (const auto& c : run_bundle("sp10")) CHECK(c.passed);
  CHECK(adjoint_weight(rs("E8")) == Weight{0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(adjoint_weight(rs("A3")) == Weight{1, 0, 1});
  CHECK(smallest_weight(rs("E6")) == Weight{1, 0, 0, 0, 0, 0});
  CHECK(smallest_weight(rs("F4")) == Weight{0, 0, 0, 1});
}

TEST_CASE("command line exit codes") {
  CHECK(cli("simple enumerate A 5").code == 0);
  auto g2 = cli("simple enumerate G 2 --format json");
  CHECK(g2.code == 0);
  CHECK(json::parse(g2.out)["count"] == 3);
  CHECK(json::parse(cli("simple enumerate A 1 --format json").out)["count"] == 7);
  CHECK(cli("simple certify G 2 --weight 2,0 --order 3").code == 0);
  auto b8 = cli("simple certify B 8 --weight 0,0,0,0,0,0,0,1 --order 3 --format json");
  CHECK(b8.code == 1);
  CHECK(json::parse(b8.out)["offending_classes"][0]["fixed_dim"] == 128);
  auto a4 = cli("simple certify A 4 --weight 1,1,0,0 --hyperplane --format json");
  CHECK(a4.code == 0);
  CHECK(json::parse(a4.out)["hyperplane"]["max_count"] == 14);
  CHECK(cli("simple certify A 4 --weight 1,1,0,0 --hyperplane --cap-hyperplane 2").code == 3);
  CHECK(cli("simple certify A 2 --weight 1,1 --order 2 --order 3").code == 1);
  CHECK(cli("simple enumerate E 9").code == 2);
  CHECK(cli("simple certify A 2 --weight 1,-1 --order 2").code == 2);
  CHECK(cli("simple certify A 2 --weight 1,1").code == 2);
  CHECK(cli("torus classify '1,x'").code == 2);
  CHECK(cli("frobnicate").code == 2);

  auto t2 = cli("torus classify '2,0;0,1;-2,-1;-1,0;-1,0' --format json");
  CHECK(t2.code == 0);
  auto j = json::parse(t2.out);
  CHECK(j["pure"] == true);
  CHECK(j["npure"] == false);
  auto t3 = json::parse(cli("torus classify '0,1,0;1,-1,0;1,0,0;-1,0,0;0,0,1;-1,0,-1' --format json").out);
  CHECK(t3["npure"] == true);
  CHECK(t3["cnpure"] == false);

  CHECK(cli("reproduce spin15-witness").code == 0);
  CHECK(cli("reproduce spin17").code == 0);
  CHECK(cli("reproduce sl --n 2").code == 0);
  CHECK(cli("reproduce torus").code == 2);

  // Same bytes regardless of thread count.
  auto one = cli("simple enumerate C 5 --certify --format json", "PURELIE_THREADS=1");
  auto many = cli("simple enumerate C 5 --certify --format json", "PURELIE_THREADS=8");
  CHECK(one.code == 0);
  CHECK(one.out == many.out);
}

TEST_CASE("output file") {
  const std::string path = "/tmp/purelie_cli_out_" + std::to_string(::getpid()) + ".json";
  CHECK(cli("simple enumerate G 2 --format json --out " + path).code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(json::parse(ss.str())["type"] == "G2");
  std::remove(path.c_str());
}
