#include <doctest.h>

#include "moncrystal/cartan.hpp"
#include "moncrystal/crystal.hpp"
#include "moncrystal/error.hpp"
#include "moncrystal/verify.hpp"

using namespace moncrystal;

namespace {

Monomial y(Node i, int k, int e = 1) { return Monomial::y(i, k, e); }

ParamSet params(const DynkinDiagram& d, MultisetTuple r) { return ParamSet(d, std::move(r)); }

}  // namespace

TEST_CASE("closure from a single seed") {
  const DynkinDiagram a1 = build_diagram("A1");
  const Crystal b = generate_closure(a1, {y(1, 0)});
  CHECK(b.size() == 2);
  CHECK(b.contains(y(1, -2, -1)));
  REQUIRE(b.edges().size() == 1);
  CHECK(b.elements()[b.edges()[0].src] == y(1, 0));
  CHECK(b.closed());

  const Crystal one = generate_closure(a1, {Monomial()});
  CHECK(one.size() == 1);
  CHECK(one.edges().empty());

  CHECK_THROWS_AS(generate_closure(build_diagram("A3"), {y(1, 0) * y(2, 1) * y(3, 0)}, 5), CapExceeded);
}

TEST_CASE("the A2 chain") {
  const DynkinDiagram a2 = build_diagram("A2");
  const Crystal b = fundamental(a2, 1, 0);
  REQUIRE(b.size() == 3);
  const std::size_t top = *b.index_of(y(1, 0));
  const std::size_t mid = *b.f_target(top, 1);
  CHECK(b.elements()[mid] == y(2, -1) * y(1, -2, -1));
  CHECK(b.elements()[*b.f_target(mid, 2)] == y(2, -3, -1));
  CHECK_FALSE(b.f_target(top, 2));
  CHECK(b.highest() == std::vector<std::size_t>{top});
  CHECK_THROWS_AS(fundamental(a2, 1, 1), ParityViolation);
}

TEST_CASE("fundamental crystals translate") {
  const DynkinDiagram a3 = build_diagram("A3");
  CHECK(fundamental(a3, 2, 1).size() == 6);
  const Crystal far = fundamental(a3, 2, 7);
  CHECK(far.contains(y(2, 7)));
  CHECK(far == fundamental(a3, 2, 1).translated(6));
  CHECK(fundamental(build_diagram("E6"), 1, 0).size() == 27);
}

TEST_CASE("product crystals in type A1") {
  const DynkinDiagram a1 = build_diagram("A1");
  const Crystal doubled = product_crystal(a1, params(a1, {{1, Multiset{0, 0}}}));
  CHECK(doubled.size() == 3);
  CHECK(doubled.contains(y(1, 0, 2)));
  CHECK(doubled.contains(y(1, 0) * y(1, -2, -1)));
  CHECK(doubled.contains(y(1, -2, -2)));

  const Crystal spread = product_crystal(a1, params(a1, {{1, Multiset{0, 2}}}));
  CHECK(spread.size() == 4);
  CHECK(spread.contains(Monomial()));
  const auto zero = weight_space(spread, WeightVec({0}));
  CHECK(zero.size() == 2);
  CHECK(weight_space(spread, WeightVec({4})).empty());
  CHECK(weight_space(spread, WeightVec({2})) == std::vector<Monomial>{y(1, 0) * y(1, 2)});

  const Crystal comp = connected_component(spread, y(1, 0) * y(1, 2));
  CHECK(comp.size() == 3);
  CHECK_THROWS_AS(connected_component(spread, y(1, 4)), NotAnElement);
}

TEST_CASE("sl3 with R_1 = {0,0,0}") {
  const DynkinDiagram a2 = build_diagram("A2");
  const ParamSet R = params(a2, {{1, Multiset{0, 0, 0}}});
  const Crystal b = product_crystal(a2, R);
  CHECK(b.size() == 10);
  CHECK(b.highest().size() == 1);
  CHECK(tensor_product_size(a2, R) == 27);
}

TEST_CASE("y_R is a highest weight element whose component has Weyl dimension") {
  const DynkinDiagram a3 = build_diagram("A3");
  const ParamSet R = params(a3, {{1, Multiset{0}}, {2, Multiset{1, 3}}, {3, Multiset{-2}}});
  const Crystal b = product_crystal(a3, R);
  const Monomial top = y_product(R.R());
  REQUIRE(b.contains(top));
  for (Node i = 1; i <= 3; ++i) CHECK(eps_phi(top, i).eps == 0);
  const Crystal comp = connected_component(b, top);
  CHECK(comp.size() == weyl_dimension(a3, R.lambda()));
  CHECK(comp.size() <= b.size());
  CHECK(b.size() <= tensor_product_size(a3, R));
}

TEST_CASE("crystal edges agree with the operators") {
  const DynkinDiagram d4 = build_diagram("D4");
  const Crystal b = product_crystal(d4, params(d4, {{1, Multiset{0}}, {3, Multiset{2}}}));
  for (const Edge& e : b.edges()) CHECK(*f_tilde(d4, b.elements()[e.src], e.label) == b.elements()[e.dst]);
  for (std::size_t v = 0; v < b.size(); ++v)
    for (Node i = 1; i <= 4; ++i)
      if (auto u = e_tilde(d4, b.elements()[v], i)) CHECK(b.contains(*u));
}

TEST_CASE("parameter classification") {
  const DynkinDiagram a1 = build_diagram("A1");
  const ParamClassification same = classify_params(a1, params(a1, {{1, Multiset{0, 0}}}));
  CHECK(same.maximally_singular);
  CHECK_FALSE(same.generic);
  const ParamClassification apart = classify_params(a1, params(a1, {{1, Multiset{0, 2}}}));
  CHECK(apart.generic);
  CHECK_FALSE(apart.maximally_singular);
  CHECK(apart.crystal_size == 4);
  CHECK(apart.tensor_size == 4);
  CHECK(apart.component_size == 3);
  const ParamClassification wide = classify_params(a1, params(a1, {{1, Multiset{0, 20}}}));
  CHECK(wide.well_spaced);
  CHECK(wide.generic);
}

TEST_CASE("explicit minuscule monomials") {
  const DynkinDiagram a2 = build_diagram("A2");
  for (const OrbitElement& g : minuscule_orbit(a2, 1)) {
    const Monomial p = minuscule_monomial(a2, g, 0);
    if (g.word.empty()) CHECK(p == y(1, 0));
    if (g.word.size() == 1) CHECK(p == y(2, -1) * y(1, -2, -1));
    if (g.word.size() == 2) CHECK(p == y(2, -3, -1));
  }
  for (const char* name : {"A4", "D5", "E6"}) {
    const DynkinDiagram d = build_diagram(name);
    for (Node i = 1; i <= d.rank(); ++i) {
      if (!is_minuscule(d, i)) continue;
      const int c = d.parity(i) == 0 ? 0 : 1;
      const Crystal b = fundamental(d, i, c);
      for (const OrbitElement& g : minuscule_orbit(d, i)) {
        CHECK(b.contains(minuscule_monomial(d, g, c)));
        CHECK(tau_check(d, g, c).holds);
      }
    }
  }
}
