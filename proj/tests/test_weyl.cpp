#include <doctest.h>

#include "moncrystal/cartan.hpp"
#include "moncrystal/verify.hpp"

using namespace moncrystal;

TEST_CASE("Weyl dimensions") {
  CHECK(weyl_dimension(build_diagram("A1"), WeightVec({4})) == 5);
  CHECK(weyl_dimension(build_diagram("A2"), WeightVec({3, 0})) == 10);
  CHECK(weyl_dimension(build_diagram("A2"), WeightVec({1, 1})) == 8);
  CHECK(weyl_dimension(build_diagram("A3"), WeightVec({0, 1, 0})) == 6);
  CHECK(weyl_dimension(build_diagram("D4"), WeightVec({0, 1, 0, 0})) == 28);
  CHECK(weyl_dimension(build_diagram("E6"), WeightVec({1, 0, 0, 0, 0, 0})) == 27);
  CHECK(weyl_dimension(build_diagram("E7"), WeightVec({0, 0, 0, 0, 0, 0, 1})) == 56);
  CHECK(weyl_dimension(build_diagram("E8"), WeightVec({0, 0, 0, 0, 0, 0, 0, 1})) == 248);
  CHECK(weyl_dimension(build_diagram("A4"), WeightVec(4)) == 1);
}
