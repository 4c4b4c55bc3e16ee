#include <doctest.h>

#include "oracles.hpp"

using namespace purelie;

namespace {
const RootSystem& rs(const char* name) { return root_system(SimpleType::parse(name)); }
}  // namespace

TEST_CASE("type parsing") {
  CHECK(SimpleType::parse("B8").rank == 8);
  CHECK(SimpleType::parse("E6").family == Family::E);
  CHECK_THROWS_AS(SimpleType::parse("C2"), InvalidInput);  // use B2
  CHECK_THROWS_AS(SimpleType::parse("D3"), InvalidInput);
  CHECK_THROWS_AS(SimpleType::parse("E9"), InvalidInput);
  CHECK_THROWS_AS(SimpleType::parse("G3"), InvalidInput);
  CHECK_THROWS_AS(SimpleType::parse("X2"), InvalidInput);
  CHECK_THROWS_AS(SimpleType::parse("A0"), InvalidInput);
}

TEST_CASE("Cartan matrices with short roots first where it matters") {
  const auto& g2 = rs("G2");
  CHECK(g2.cartan(0, 1) == -3);
  CHECK(g2.cartan(1, 0) == -1);
  const auto& b2 = rs("B2");  // alpha_2 short
  CHECK(b2.cartan(0, 1) == -1);
  CHECK(b2.cartan(1, 0) == -2);
  const auto& c3 = rs("C3");  // alpha_3 long
  CHECK(c3.cartan(2, 1) == -1);
  CHECK(c3.cartan(1, 2) == -2);
  const auto& f4 = rs("F4");
  CHECK(f4.cartan(1, 2) == -1);
  CHECK(f4.cartan(2, 1) == -2);
  const auto& e6 = rs("E6");  // branch node 4 (index 3) meets 2 (index 1)
  CHECK(e6.cartan(3, 1) == -1);
  CHECK(e6.cartan(2, 1) == 0);
}

TEST_CASE("positive root counts and group dimensions") {
  struct Row {
    const char* type;
    std::size_t roots;
    std::int64_t dim;
  };
  for (auto r : {Row{"A1", 1, 3}, Row{"A4", 10, 24}, Row{"B3", 9, 21}, Row{"C4", 16, 36}, Row{"D4", 12, 28},
                 Row{"D9", 72, 153}, Row{"G2", 6, 14}, Row{"F4", 24, 52}, Row{"E6", 36, 78}, Row{"E7", 63, 133},
                 Row{"E8", 120, 248}}) {
    CAPTURE(r.type);
    CHECK(rs(r.type).positive_roots().size() == r.roots);
    CHECK(rs(r.type).group_dim() == r.dim);
  }
}

TEST_CASE("Weyl group orders from the regular orbit") {
  CHECK(rs("A3").weyl_orbit(rs("A3").rho()).size() == 24);
  CHECK(rs("B3").weyl_orbit(rs("B3").rho()).size() == 48);
  CHECK(rs("D4").weyl_orbit(rs("D4").rho()).size() == 192);
  CHECK(rs("G2").weyl_orbit(rs("G2").rho()).size() == 12);
  CHECK(rs("F4").weyl_orbit(rs("F4").rho()).size() == 1152);
  // Minuscule orbits: 27 weights for E6 w1, 56 for E7 w7.
  CHECK(rs("E6").weyl_orbit(Weight{1, 0, 0, 0, 0, 0}).size() == 27);
  CHECK(rs("E7").weyl_orbit(Weight{0, 0, 0, 0, 0, 0, 1}).size() == 56);
}

TEST_CASE("reflections") {
  const auto& a2 = rs("A2");
  // 0-based index: s_0(1,0) = (1,0) - 1*(2,-1) = (-1,1).
  CHECK(a2.simple_reflection(0, Weight{1, 0}) == Weight{-1, 1});
  for (const char* t : {"B3", "G2", "E6"}) {
    const auto& r = rs(t);
    Weight w(r.rank());
    for (std::size_t i = 0; i < r.rank(); ++i) w[i] = oracle::uniform(-3, 3);
    for (std::size_t i = 0; i < r.rank(); ++i) CHECK(r.simple_reflection(i, r.simple_reflection(i, w)) == w);
    const Weight d = r.dominant_representative(w);
    CHECK(d.is_dominant());
    auto orbit = r.weyl_orbit(d);
    CHECK(std::binary_search(orbit.begin(), orbit.end(), w));
  }
}

TEST_CASE("roots and the root lattice") {
  const auto& a2 = rs("A2");
  CHECK(a2.is_root(Weight{1, 1}));
  CHECK(a2.is_root(Weight{-1, -1}));
  CHECK_FALSE(a2.is_root(Weight{1, 0}));
  CHECK(a2.in_root_lattice(Weight{1, 1}));
  CHECK(a2.in_root_lattice(Weight{3, 0}));
  CHECK_FALSE(a2.in_root_lattice(Weight{1, 0}));
  CHECK(rs("E8").in_root_lattice(Weight{0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK_FALSE(rs("E7").in_root_lattice(Weight{0, 0, 0, 0, 0, 0, 1}));
  CHECK(rs("G2").root_coords(Weight{0, 1}) == std::vector<std::int64_t>{3, 2});  // highest root 3a1+2a2
}

TEST_CASE("duality and outer symmetries") {
  const auto& a4 = rs("A4");
  CHECK(a4.dual_weight(Weight{1, 0, 0, 0}) == Weight{0, 0, 0, 1});
  CHECK(a4.outer_canonical(Weight{0, 0, 1, 0}) == Weight{0, 1, 0, 0});
  const auto& d4 = rs("D4");
  CHECK(d4.outer_canonical(Weight{0, 0, 1, 0}) == Weight{1, 0, 0, 0});
  CHECK(d4.outer_canonical(Weight{0, 0, 0, 1}) == Weight{1, 0, 0, 0});
  CHECK(d4.outer_images(Weight{1, 0, 0, 0}).size() == 3);
  CHECK(rs("D5").outer_canonical(Weight{0, 0, 0, 0, 1}) == Weight{0, 0, 0, 1, 0});
  CHECK(rs("E6").outer_canonical(Weight{0, 0, 0, 0, 0, 1}) == Weight{1, 0, 0, 0, 0, 0});
  // Self-dual families.
  CHECK(rs("B4").dual_weight(Weight{0, 0, 1, 1}) == Weight{0, 0, 1, 1});
  CHECK(rs("E7").dual_weight(Weight{0, 0, 0, 0, 0, 0, 1}) == Weight{0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("orthogonal coordinates") {
  auto half = Rational(1, 2);
  CHECK(rs("B2").from_orthogonal({half, half}) == Weight{0, 1});
  CHECK(rs("C3").from_orthogonal({Rational(1), Rational(1), Rational(0)}) == Weight{0, 1, 0});
  CHECK(rs("C3").from_orthogonal({Rational(1), Rational(1), Rational(1)}) == Weight{0, 0, 1});
  CHECK(rs("D4").from_orthogonal({half, half, half, half}) == Weight{0, 0, 0, 1});
  CHECK(rs("D4").from_orthogonal({half, half, half, -half}) == Weight{0, 0, 1, 0});
  CHECK(rs("B3").from_orthogonal({Rational(1), Rational(0), Rational(0)}) == Weight{1, 0, 0});
}

TEST_CASE("weight text helpers") {
  CHECK(parse_weight("1, 0,2") == Weight{1, 0, 2});
  CHECK(format_weight(Weight{1, 0, 2}) == "1,0,2");
  CHECK(omega_notation(Weight{2, 0, 1}) == "2w1+w3");
  CHECK(omega_notation(Weight{0, 0}) == "0");
  CHECK_THROWS_AS(parse_weight("1,a"), InvalidInput);
  CHECK(Weight{1, 0, 2}.width() == 3);
  CHECK(Weight{1, 0, 2}.support() == 2);
}
