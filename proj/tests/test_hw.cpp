#include <doctest.h>

#include "moncrystal/cartan.hpp"
#include "moncrystal/error.hpp"
#include "moncrystal/hw.hpp"

using namespace moncrystal;

namespace {

Monomial y(Node i, int k, int e = 1) { return Monomial::y(i, k, e); }

HalfIntPoly poly(std::initializer_list<int> doubled) { return HalfIntPoly(Multiset(doubled)); }

}  // namespace

TEST_CASE("half-integer polynomials") {
  const HalfIntPoly p = poly({0, 0, 0, 1, 1});
  CHECK(p.degree() == 5);
  CHECK(to_string(p) == "u^3*(u - 1/2)^2");
  CHECK(to_string(HalfIntPoly()) == "1");
  CHECK(to_string(poly({-2})) == "(u + 1)");
  CHECK(poly({0, 1}).divides(p));
  CHECK_FALSE(poly({2}).divides(p));
  CHECK(poly({0}) * poly({1}) == poly({1, 0}));
}

TEST_CASE("problem setup") {
  const DynkinDiagram a2 = build_diagram("A2");
  const ParamSet R(a2, {{1, Multiset{0, 0}}, {2, Multiset{1}}});
  const HwProblem prob = make_hw_problem(a2, R, WeightVec({0, 2}));
  CHECK(prob.m == RootVec({1, 0}));
  CHECK(prob.dominant);
  CHECK_FALSE(make_hw_problem(a2, R, WeightVec({-2, 3})).dominant);
  CHECK_THROWS_AS(make_hw_problem(a2, R, WeightVec({4, 0})), InvalidArgument);
  CHECK_THROWS_AS(make_hw_problem(a2, R, WeightVec({1})), SizeMismatch);
  CHECK_THROWS_AS(make_hw_problem(a2, R, WeightVec({2, 0})), NotInRootLattice);
}

TEST_CASE("the containment condition") {
  const MultisetTuple R{{1, Multiset{0, 2}}};
  const ConditionElement top{1, 0, y(1, 0), {}};
  CHECK(hw_condition(top, R, MultisetTuple{{1, Multiset{2}}}));

  const ConditionElement down{1, 0, y(1, -2, -1), MultisetTuple{{1, Multiset{-2}}}};
  CHECK(hw_condition(down, R, MultisetTuple{{1, Multiset{0}}}));
  CHECK_FALSE(hw_condition(down, R, MultisetTuple{{1, Multiset{2}}}));

  const ConditionElement shifted{1, 2, y(1, 0, -1), MultisetTuple{{1, Multiset{0}}}};
  CHECK_THROWS_AS(hw_condition(shifted, R, {}), InvalidArgument);
}

TEST_CASE("highest weight enumeration") {
  const DynkinDiagram a1 = build_diagram("A1");
  const ParamSet R1(a1, {{1, Multiset{0, 2}}});
  CHECK(enumerate_highest_weights(make_hw_problem(a1, R1, WeightVec({2}))) ==
        std::vector<MultisetTuple>{{}});
  CHECK(enumerate_highest_weights(make_hw_problem(a1, R1, WeightVec({0}))) ==
        std::vector<MultisetTuple>{{{1, Multiset{-2}}}, {{1, Multiset{0}}}});

  const DynkinDiagram a2 = build_diagram("A2");
  const ParamSet R2(a2, {{1, Multiset{0}}});
  const auto bottom = enumerate_highest_weights(make_hw_problem(a2, R2, WeightVec({0, -1})), 2);
  CHECK(bottom == std::vector<MultisetTuple>{{{1, Multiset{-2}}, {2, Multiset{-3}}}});
}

TEST_CASE("chain decompositions") {
  CHECK(chain_decompose(Multiset{3, 1}, Multiset{1, 3})->is_one());
  const auto p = chain_decompose(Multiset{4}, Multiset{0});
  REQUIRE(p);
  CHECK(*p == poly({2, 4}));
  CHECK(chain_identity_holds(Multiset{4}, Multiset{0}, *p));
  CHECK_FALSE(chain_identity_holds(Multiset{4}, Multiset{0}, poly({0, 2})));
  CHECK_FALSE(chain_decompose(Multiset{0}, Multiset{2}));

  const auto q = chain_decompose(Multiset{6, 2, 2}, Multiset{2, 0, -2});
  REQUIRE(q);
  CHECK(q->degree() == 5);
  CHECK(chain_identity_holds(Multiset{6, 2, 2}, Multiset{2, 0, -2}, *q));

  CHECK_THROWS_AS(chain_decompose(Multiset{0, 2}, Multiset{0}), SizeMismatch);
  CHECK_THROWS_AS(chain_decompose(Multiset{1}, Multiset{0}), CosetMismatch);
}

TEST_CASE("finite dimensionality through injections") {
  const DynkinDiagram a1 = build_diagram("A1");
  const MultisetTuple R{{1, Multiset{0, 2}}};

  const FiniteDimData empty = finite_dim_test(a1, R, {});
  CHECK(empty.finite);
  CHECK(empty.Q.at(1) == poly({0, 2}));
  CHECK(empty.P.at(1).is_one());

  const FiniteDimData one = finite_dim_test(a1, R, MultisetTuple{{1, Multiset{0}}});
  CHECK(one.finite);
  CHECK(one.injection.at(1) == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(one.P.at(1).is_one());
  CHECK(one.Q.at(1).is_one());

  CHECK_FALSE(finite_dim_test(a1, MultisetTuple{{1, Multiset{0}}}, MultisetTuple{{1, Multiset{-2}}}).finite);
}

TEST_CASE("G-polynomials for sl3") {
  const DynkinDiagram a2 = build_diagram("A2");
  const ParamSet R(a2, {{1, Multiset{0, 0}}, {2, Multiset{1}}});
  const HwProblem prob = make_hw_problem(a2, R, WeightVec({0, 2}));
  // mu = (0, 2), m = (1, 0).
  CHECK(*g_poly_path(prob, 1, {}, {}) == poly({0}));
  CHECK(*g_poly_path(prob, 1, {1}, {1}) == poly({0}));
  CHECK(*g_poly_path(prob, 1, {1, 2}, {1, 3}) == poly({0, 1, 1}));
  CHECK_FALSE(g_poly_path(prob, 1, {2}, {1}));

  const auto orbit = minuscule_orbit(a2, 1);
  for (const OrbitElement& g : orbit) {
    const HalfIntPoly G = g_gamma(prob, g);
    CHECK(static_cast<int>(G.degree()) == g_gamma_expected_degree(prob, g));
    if (g.word.empty()) CHECK(G == poly({0}));
    for (const OrbitElement& h : orbit)
      if (h.word.size() < g.word.size()) CHECK(g_gamma(prob, h).divides(G));
  }
}

TEST_CASE("minimal words") {
  const DynkinDiagram a3 = build_diagram("A3");
  for (const OrbitElement& g : minuscule_orbit(a3, 2)) {
    const auto words = minimal_words(a3, g);
    REQUIRE_FALSE(words.empty());
    for (const auto& w : words) CHECK(w.size() == g.word.size());
    // The lowest element of varpi_2 in A3 is reached by 2 1 3 2 and 2 3 1 2.
    if (g.word.size() == 4) CHECK(words.size() == 2);
  }
}
