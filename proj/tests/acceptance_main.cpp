#include <cstdlib>
#include <iostream>

#include "moncrystal/verify.hpp"

int main(int argc, char** argv) {
  moncrystal::AcceptanceOptions opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  std::cout << "seed " << opt.seed << '\n';
  int failed = 0;
  for (int id = 1; id <= moncrystal::kCriterionCount; ++id) {
    const auto r = moncrystal::run_criterion(id, opt);
    std::cout << moncrystal::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (moncrystal::kCriterionCount - failed) << "/" << moncrystal::kCriterionCount
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
