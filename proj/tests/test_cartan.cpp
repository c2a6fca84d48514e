#include <doctest.h>

#include "moncrystal/cartan.hpp"
#include "moncrystal/error.hpp"

using namespace moncrystal;

TEST_CASE("path diagrams carry the canonical bipartition") {
  const DynkinDiagram a2 = build_diagram("A2");
  CHECK(a2.rank() == 2);
  CHECK(a2.adjacent(1, 2));
  CHECK(a2.parity(1) == 0);
  CHECK(a2.parity(2) == 1);

  const DynkinDiagram a1 = build_diagram("A1");
  CHECK(a1.rank() == 1);
  CHECK(a1.neighbors(1).empty());
  CHECK(a1.parity(1) == 0);
}

TEST_CASE("Bourbaki labels for D and E") {
  const DynkinDiagram d4 = build_diagram("D4");
  CHECK(d4.neighbors(2) == std::vector<Node>{1, 3, 4});
  CHECK(d4.parity(2) == 1);
  CHECK(d4.parity(4) == 0);

  const DynkinDiagram e6 = build_diagram("E6");
  CHECK(e6.neighbors(4) == std::vector<Node>{2, 3, 5});
  CHECK(e6.neighbors(1) == std::vector<Node>{3});
  CHECK(e6.parity(2) == 1);

  const DynkinDiagram e8 = build_diagram("E8");
  CHECK(positive_roots(e8).size() == 120);
  CHECK(positive_roots(build_diagram("E7")).size() == 63);
  CHECK(positive_roots(build_diagram("D5")).size() == 20);
}

TEST_CASE("bipartition is a proper colouring, flip swaps it") {
  for (const char* name : {"A5", "D6", "E7"}) {
    const DynkinDiagram d = build_diagram(name);
    const DynkinDiagram f = d.flipped();
    for (Node i = 1; i <= d.rank(); ++i) {
      CHECK(f.parity(i) == 1 - d.parity(i));
      for (Node j : d.neighbors(i)) CHECK(d.parity(i) != d.parity(j));
    }
    CHECK_FALSE(d == f);
    CHECK(f.flipped() == d);
  }
}

TEST_CASE("invalid names are rejected") {
  CHECK_THROWS_AS(build_diagram("D3"), InvalidDiagram);
  CHECK_THROWS_AS(build_diagram("E9"), InvalidDiagram);
  CHECK_THROWS_AS(build_diagram("A13"), InvalidDiagram);
  CHECK_THROWS_AS(build_diagram("B2"), InvalidDiagram);
  CHECK_THROWS_AS(build_diagram(""), InvalidDiagram);
}

TEST_CASE("weight and root coordinates") {
  const DynkinDiagram a2 = build_diagram("A2");
  CHECK(weight_to_root(a2, WeightVec({2, -1})) == RootVec({1, 0}));
  CHECK(root_to_weight(a2, RootVec({1, 1})) == WeightVec({1, 1}));
  CHECK_THROWS_AS(weight_to_root(a2, fundamental_weight(a2, 1)), NotInRootLattice);

  const DynkinDiagram d4 = build_diagram("D4");
  const RootVec theta = weight_to_root(d4, fundamental_weight(d4, 2));
  CHECK(theta == RootVec({1, 2, 1, 1}));
  CHECK(height(d4, theta) == 5);
  CHECK(twice_height_of_fundamental(d4, 1) == 6);
  CHECK(twice_height_of_fundamental(build_diagram("A2"), 1) == 2);
}

TEST_CASE("minuscule nodes and orbits") {
  const DynkinDiagram d4 = build_diagram("D4");
  CHECK(is_minuscule(d4, 1));
  CHECK_FALSE(is_minuscule(d4, 2));
  CHECK(minuscule_orbit(d4, 1).size() == 8);
  CHECK(minuscule_orbit(build_diagram("A3"), 2).size() == 6);
  CHECK(minuscule_orbit(build_diagram("E6"), 1).size() == 27);
  CHECK(minuscule_orbit(build_diagram("E7"), 7).size() == 56);
  CHECK_THROWS_AS(minuscule_orbit(build_diagram("E8"), 8), NotMinuscule);

  for (const char* name : {"A4", "D5", "E6"}) {
    const DynkinDiagram d = build_diagram(name);
    for (Node i = 1; i <= d.rank(); ++i) {
      if (!is_minuscule(d, i)) continue;
      for (const OrbitElement& g : minuscule_orbit(d, i)) {
        WeightVec v = fundamental_weight(d, i);
        for (Node p : g.word) v = reflect(d, p, v);
        CHECK(v == g.gamma);
        const RootVec drop = weight_to_root(d, fundamental_weight(d, i) - g.gamma);
        CHECK(static_cast<int>(g.word.size()) == height(d, drop));
      }
    }
  }
}

TEST_CASE("chi is w rho - rho") {
  const DynkinDiagram a2 = build_diagram("A2");
  for (const OrbitElement& g : minuscule_orbit(a2, 1)) {
    if (g.word == std::vector<Node>{1, 2}) CHECK(chi(a2, g) == RootVec({-1, -2}));
    if (g.word.empty()) CHECK(chi(a2, g).is_zero());
  }
  // chi(gamma) is minus the sum of the positive roots sent negative by w^{-1}.
  const DynkinDiagram a3 = build_diagram("A3");
  for (const OrbitElement& g : minuscule_orbit(a3, 2)) {
    RootVec sum(3);
    for (const RootVec& beta : positive_roots(a3)) {
      RootVec b = beta;
      for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) b = reflect(a3, *it, b);
      if (height(a3, b) < 0) sum -= beta;
    }
    CHECK(chi(a3, g) == sum);
  }
}
