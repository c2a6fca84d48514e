#pragma once

// Independent oracles and the cross-check suites behind `moncrystal verify`.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "moncrystal/cartan.hpp"

namespace moncrystal {

/// dim V(lambda) = prod_{beta > 0} (lambda + rho, beta) / (rho, beta).
boost::multiprecision::cpp_int weyl_dimension(const DynkinDiagram& d, const WeightVec& lambda);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20161016;
  std::size_t jobs = 1;
  std::set<int> only;  ///< empty runs every criterion
};

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

/// "PASS  3  title  (1.23 s / 300 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace moncrystal
