#include <doctest.h>

#include "moncrystal/cartan.hpp"
#include "moncrystal/error.hpp"
#include "moncrystal/monomial.hpp"

using namespace moncrystal;

namespace {

Monomial y(Node i, int k, int e = 1) { return Monomial::y(i, k, e); }

}  // namespace

TEST_CASE("multiset algebra") {
  Multiset a{0, 0, 2};
  CHECK(a.size() == 3);
  CHECK(a.count(0) == 2);
  CHECK(a.count(1) == 0);
  CHECK(a.shifted(1) == Multiset{1, 1, 3});
  CHECK(a.contains(Multiset{0, 2}));
  CHECK_FALSE(a.contains(Multiset{2, 2}));
  CHECK(a.minus(Multiset{0}) == Multiset{0, 2});
  CHECK((a + Multiset{2}).count(2) == 2);
  a.remove(0, 2);
  CHECK(a.entries().count(0) == 0);
  CHECK(*a.min() == 2);
}

TEST_CASE("monomial multiplication is canonical") {
  const Monomial p = y(1, 0) * y(1, 2);
  CHECK(p * Monomial() == p);
  CHECK((y(1, 0) * y(1, 0).inverse()).is_one());
  CHECK(p.terms().size() == 2);
  CHECK(p.exponent(1, 2) == 1);
  CHECK(p * p.inverse() == Monomial());
  CHECK(Monomial::from_terms({{1, 2, 1}, {1, 0, 3}, {1, 0, -2}, {2, 1, 0}}) == p);
  CHECK(to_string(y(2, -1) * y(1, -2, -1)) == "y(1,-2)^-1*y(2,-1)");
  CHECK(to_string(Monomial()) == "1");
}

TEST_CASE("z factors") {
  const DynkinDiagram a1 = build_diagram("A1");
  const DynkinDiagram a2 = build_diagram("A2");
  const DynkinDiagram d4 = build_diagram("D4");
  CHECK(z_factor(a1, 1, 0) == y(1, 0) * y(1, 2));
  CHECK(z_factor(a2, 1, 0) == y(1, 0) * y(1, 2) * y(2, 1, -1));
  CHECK(z_factor(d4, 2, 1) == y(2, 1) * y(2, 3) * y(1, 2, -1) * y(3, 2, -1) * y(4, 2, -1));
  CHECK_THROWS_AS(z_factor(a2, 1, 1), ParityViolation);
}

TEST_CASE("weights") {
  const DynkinDiagram a1 = build_diagram("A1");
  const DynkinDiagram a2 = build_diagram("A2");
  CHECK(weight(a1, Monomial()).is_zero());
  CHECK(weight(a1, y(1, 0) * y(1, 2)) == WeightVec({2}));
  CHECK(weight(a2, z_factor(a2, 1, 0)) == WeightVec({2, -1}));
}

TEST_CASE("epsilon and phi") {
  const EpsPhi up = eps_phi(y(1, 0), 1);
  CHECK(up.eps == 0);
  CHECK(up.phi == 1);
  CHECK(up.k_phi == 0);

  const EpsPhi down = eps_phi(y(1, 0, -1), 1);
  CHECK(down.eps == 1);
  CHECK(down.k_eps == 0);
  CHECK(down.phi == 0);

  const EpsPhi one = eps_phi(Monomial(), 1);
  CHECK(one.eps == 0);
  CHECK(one.phi == 0);

  // y_{1,2} y_{1,-2}^{-1}: the negative factor sits to the left.
  const EpsPhi mixed = eps_phi(y(1, 2) * y(1, -2, -1), 1);
  CHECK(mixed.eps == 1);
  CHECK(mixed.phi == 1);
  CHECK(mixed.k_eps == -2);
  CHECK(mixed.k_phi == 2);
}

TEST_CASE("Kashiwara operators on small monomials") {
  const DynkinDiagram a1 = build_diagram("A1");
  const DynkinDiagram a2 = build_diagram("A2");
  CHECK_FALSE(e_tilde(a1, y(1, 0), 1));
  CHECK(*e_tilde(a1, y(1, 0, -1), 1) == y(1, 2));
  CHECK(*f_tilde(a1, y(1, 0), 1) == y(1, -2, -1));
  CHECK_FALSE(f_tilde(a1, y(1, -2, -1), 1));

  const Monomial mid = y(2, -1) * y(1, -2, -1);
  CHECK(*f_tilde(a2, y(1, 0), 1) == mid);
  CHECK(*e_tilde(a2, mid, 1) == y(1, 0));
  CHECK(*f_tilde(a2, mid, 2) == y(2, -3, -1));
  CHECK_FALSE(f_tilde(a2, y(1, 0), 2));
}

TEST_CASE("operators are partial inverses and shift weights by simple roots") {
  const DynkinDiagram d4 = build_diagram("D4");
  const Monomial p = y(1, 0) * y(2, 3) * y(4, -2, -1) * y(3, 2);
  for (Node i = 1; i <= d4.rank(); ++i) {
    if (auto f = f_tilde(d4, p, i)) {
      CHECK(f->parity_valid(d4));
      CHECK(*e_tilde(d4, *f, i) == p);
      CHECK(weight(d4, *f) == weight(d4, p) - simple_root_weight(d4, i));
    }
    if (auto e = e_tilde(d4, p, i)) {
      CHECK(*f_tilde(d4, *e, i) == p);
      CHECK(weight(d4, *e) == weight(d4, p) + simple_root_weight(d4, i));
    }
  }
}

TEST_CASE("decomposition p = y_R z_S^{-1}") {
  const DynkinDiagram a1 = build_diagram("A1");
  const MultisetTuple R{{1, Multiset{0}}};
  CHECK(decompose_S(a1, R, y(1, -2, -1)) == MultisetTuple{{1, Multiset{-2}}});
  CHECK(decompose_S(a1, R, y(1, 0)).empty());
  CHECK_THROWS_AS(decompose_S(a1, R, y(1, 2)), NotDecomposable);
  CHECK_THROWS_AS(decompose_S(a1, R, y(1, 0, 2)), NotDecomposable);
}

TEST_CASE("decomposition recovers the A8 figure data") {
  const DynkinDiagram d = build_diagram("A8").flipped();
  const MultisetTuple R{{3, Multiset{3, 5, 5}}, {5, Multiset{5}}, {6, Multiset{2, 4}}, {7, Multiset{5}}};
  const MultisetTuple S{{2, Multiset{2}},       {3, Multiset{1, 1, 3, 3}}, {4, Multiset{0, 0, 0, 0, 2}},
                        {5, Multiset{1, 1, 1, 3}}, {6, Multiset{2, 2}},     {7, Multiset{1, 1, 3}},
                        {8, Multiset{2}}};
  const Monomial p = y_product(R) * z_product(d, S).inverse();
  CHECK(p.parity_valid(d));
  CHECK(decompose_S(d, R, p) == S);
  const MultisetTuple T = t_multisets(d, R, S);
  CHECK(y_product(T) * y_product(S).inverse() == p);
}

TEST_CASE("T multisets") {
  const DynkinDiagram a1 = build_diagram("A1");
  const DynkinDiagram a2 = build_diagram("A2");
  CHECK(t_multisets(a1, MultisetTuple{{1, Multiset{0}}}, MultisetTuple{{1, Multiset{-2}}}).empty());
  const MultisetTuple R{{1, Multiset{0, 2}}};
  CHECK(t_multisets(a1, R, {}) == R);
  CHECK(t_multisets(a1, R, MultisetTuple{{1, Multiset{0}}}) == MultisetTuple{{1, Multiset{0}}});
  CHECK_THROWS_AS(t_multisets(a1, R, MultisetTuple{{1, Multiset{2}}}), ContainmentViolation);

  // A2, R_1 = {0}, S_1 = {-2}, S_2 = {-3}: T_1 = {0, -2} \ {0}, T_2 = {-1} \ {-1}.
  const MultisetTuple S{{1, Multiset{-2}}, {2, Multiset{-3}}};
  const MultisetTuple T = t_multisets(a2, MultisetTuple{{1, Multiset{0}}}, S);
  CHECK(T == MultisetTuple{{1, Multiset{-2}}});
}

TEST_CASE("highest weight counting criterion") {
  CHECK(is_highest_weight({}, MultisetTuple{{1, Multiset{0}}}));
  CHECK_FALSE(is_highest_weight(MultisetTuple{{1, Multiset{-2}}}, {}));
  CHECK(is_highest_weight(MultisetTuple{{1, Multiset{0}}}, MultisetTuple{{1, Multiset{0}}}));
  CHECK(is_highest_weight(MultisetTuple{{1, Multiset{2}}}, MultisetTuple{{1, Multiset{0}}}));
  CHECK_FALSE(is_highest_weight(MultisetTuple{{1, Multiset{0}}}, MultisetTuple{{1, Multiset{2}}}));
}

TEST_CASE("parameter sets enforce parity") {
  const DynkinDiagram a2 = build_diagram("A2");
  const ParamSet R(a2, MultisetTuple{{1, Multiset{0, 2}}, {2, Multiset{1}}});
  CHECK(R.lambda() == WeightVec({2, 1}));
  CHECK_THROWS_AS(ParamSet(a2, MultisetTuple{{1, Multiset{1}}}), ParityViolation);
}
