#include <doctest.h>

#include <algorithm>

#include "moncrystal/cartan.hpp"
#include "moncrystal/crystal.hpp"
#include "moncrystal/regularity.hpp"

using namespace moncrystal;

namespace {

const DynkinDiagram& a8_flipped() {
  static const DynkinDiagram d = build_diagram("A8").flipped();
  return d;
}

MultisetTuple condition_R() { return {{2, Multiset{4, 4}}, {4, Multiset{6}}, {6, Multiset{4}}}; }

MultisetTuple condition_S() {
  return {{2, Multiset{2, 2}},       {3, Multiset{1, 1, 1, 3}}, {4, Multiset{2, 4}}, {5, Multiset{1, 1, 3}},
          {6, Multiset{0, 0, 0, 2, 2}}, {7, Multiset{1, 1}},       {8, Multiset{2}}};
}

}  // namespace

TEST_CASE("condition bank holds the base crystals") {
  const DynkinDiagram a2 = build_diagram("A2");
  const ConditionBank& bank = ConditionBank::get(a2);
  CHECK(&bank == &ConditionBank::get(a2));
  CHECK(bank.at(1).size() == 3);
  CHECK(bank.at(2).size() == 3);
  const ConditionElement q = ConditionBank::shifted(1, bank.at(1).front(), 3);
  CHECK(q.base == 1);
  CHECK(q.n == 3);
  CHECK(q.q.terms().front().k % 2 != 0);
}

TEST_CASE("pairing of the top element") {
  // q = y_{1,1} against p = y_{1,0} z_{1,0}^{-1}... in A1 the pairing is S_1(0) for q = y_{1,1}.
  const DynkinDiagram a1 = build_diagram("A1");
  const ConditionBank& bank = ConditionBank::get(a1);
  for (const auto& e : bank.at(1)) {
    if (!e.U.empty()) continue;
    const ConditionElement q = ConditionBank::shifted(1, e, 1);
    CHECK(e_pairing(q, MultisetTuple{{1, Multiset{0}}}, MultisetTuple{{1, Multiset{0}}}) == 1);
    CHECK(e_pairing(q, MultisetTuple{{1, Multiset{0}}}, {}) == 0);
  }
}

TEST_CASE("empty S is always regular") {
  for (const char* name : {"A1", "A3", "D4"}) {
    const DynkinDiagram d = build_diagram(name);
    MultisetTuple R;
    for (Node i = 1; i <= d.rank(); ++i) R.add(i, d.parity(i));
    CHECK(is_regular(d, R, {}).regular);
  }
}

TEST_CASE("the A8 figure condition fails with value -1") {
  const DynkinDiagram& d = a8_flipped();
  const RegularityResult r = is_regular(d, condition_R(), condition_S());
  CHECK_FALSE(r.regular);
  REQUIRE(r.witness);
  CHECK(r.witness->value < 0);
  const auto fails = failing_conditions(d, condition_R(), condition_S());
  CHECK(fails.front().condition.q == r.witness->condition.q);
  const bool caption = std::any_of(fails.begin(), fails.end(), [](const RegularityWitness& w) {
    return w.condition.base == 5 && w.condition.n == 6 && w.value == -1;
  });
  CHECK(caption);
}

TEST_CASE("the A8 figure monomial is regular") {
  const MultisetTuple R{{3, Multiset{3, 5, 5}}, {5, Multiset{5}}, {6, Multiset{2, 4}}, {7, Multiset{5}}};
  const MultisetTuple S{{2, Multiset{2}},       {3, Multiset{1, 1, 3, 3}}, {4, Multiset{0, 0, 0, 0, 2}},
                        {5, Multiset{1, 1, 1, 3}}, {6, Multiset{2, 2}},     {7, Multiset{1, 1, 3}},
                        {8, Multiset{2}}};
  CHECK(is_regular(a8_flipped(), R, S).regular);
}

TEST_CASE("weight gaps") {
  const DynkinDiagram a2 = build_diagram("A2");
  CHECK(*weight_gap(a2, WeightVec({1, 1}), WeightVec({-1, 2})) == RootVec({1, 0}));
  CHECK_FALSE(weight_gap(a2, WeightVec({1, 0}), WeightVec({3, -1})));
  CHECK_THROWS(weight_gap(a2, WeightVec({1, 0}), WeightVec({0, 0})));
}

TEST_CASE("containment candidates") {
  const DynkinDiagram a1 = build_diagram("A1");
  const MultisetTuple R{{1, Multiset{0, 2}}};
  const auto cands = containment_candidates(a1, R, RootVec({1}));
  CHECK(cands == std::vector<MultisetTuple>{{{1, Multiset{-2}}}, {{1, Multiset{0}}}});
  CHECK(containment_candidates(a1, R, RootVec({0})) == std::vector<MultisetTuple>{{}});
  CHECK(containment_candidates(a1, R, RootVec({3})).empty());
}

TEST_CASE("enumeration matches the product crystal") {
  const DynkinDiagram a1 = build_diagram("A1");
  const auto zero = enumerate_by_regularity(a1, {{1, Multiset{0, 2}}}, WeightVec({0}));
  CHECK(zero == std::vector<MultisetTuple>{{{1, Multiset{-2}}}, {{1, Multiset{0}}}});

  const DynkinDiagram a2 = build_diagram("A2");
  const ParamSet R(a2, {{1, Multiset{0, 2}}, {2, Multiset{1}}});
  const Crystal b = product_crystal(a2, R);
  for (const auto& [mu, idx] : b.weight_index()) {
    const auto found = enumerate_by_regularity(a2, R.R(), mu, 2);
    CHECK(found.size() == idx.size());
    for (const MultisetTuple& S : found) CHECK(b.contains(y_product(R.R()) * z_product(a2, S).inverse()));
  }
}

TEST_CASE("parallel filtering keeps order") {
  std::vector<MultisetTuple> cands;
  for (int k = 0; k < 20; ++k) cands.push_back({{1, Multiset{2 * k}}});
  const auto kept = filter_candidates(cands, [](const MultisetTuple& S) { return S.at(1).count(8) == 0; }, 3);
  CHECK(kept.size() == 19);
  CHECK(std::is_sorted(kept.begin(), kept.end()));
}
