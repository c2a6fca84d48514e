#pragma once

// Membership in B(lambda, R) through the pairings E_q(p) against elements q
// of opposite-parity fundamental crystals.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "moncrystal/cartan.hpp"
#include "moncrystal/monomial.hpp"

namespace moncrystal {

/// q = y_{i,n} z_U^{-1}, an element of B(varpi_i, n) with n of the
/// parity opposite to node i.
struct ConditionElement {
  Node base = 0;
  int n = 0;
  Monomial q;
  MultisetTuple U;
};

/// Elements of B(varpi_i, 0) for every node, with their U decompositions.
/// Built once per diagram and shared.
class ConditionBank {
 public:
  struct Entry {
    Monomial q;
    MultisetTuple U;
  };

  static const ConditionBank& get(const DynkinDiagram& d);

  const std::vector<Entry>& at(Node i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
  /// Smallest / largest index k occurring in q or U over B(varpi_i, 0).
  int lo(Node i) const { return lo_.at(static_cast<std::size_t>(i - 1)); }
  int hi(Node i) const { return hi_.at(static_cast<std::size_t>(i - 1)); }

  /// The element shifted into B(varpi_i, n).
  static ConditionElement shifted(Node i, const Entry& e, int n);

 private:
  explicit ConditionBank(const DynkinDiagram& d);
  std::vector<std::vector<Entry>> entries_;
  std::vector<int> lo_;
  std::vector<int> hi_;
};

/// E_q(p) = sum U_j(k) R_j(k+1) + sum b_{j,k} S_j(k-1), with b the exponents of q.
int e_pairing(const ConditionElement& qe, const MultisetTuple& R, const MultisetTuple& S);

struct RegularityWitness {
  ConditionElement condition;
  int value = 0;
};

struct RegularityResult {
  bool regular = true;
  std::optional<RegularityWitness> witness;  ///< first failure in scan order
};

/// Checks E_q(p) >= 0 for p = y_R z_S^{-1} over every node i, every
/// opposite-parity n whose shifted crystal can meet the supports of R and S,
/// and every q in B(varpi_i, n). Scan order: ascending i, ascending n,
/// sorted crystal order.
RegularityResult is_regular(const DynkinDiagram& d, const MultisetTuple& R, const MultisetTuple& S);

/// Every failing condition, in scan order.
std::vector<RegularityWitness> failing_conditions(const DynkinDiagram& d, const MultisetTuple& R,
                                                  const MultisetTuple& S);

/// m with lambda - mu = sum m_i alpha_i, or nullopt when some m_i < 0.
/// Throws NotInRootLattice.
std::optional<RootVec> weight_gap(const DynkinDiagram& d, const WeightVec& lambda,
                                  const WeightVec& mu);

/// All S with |S_i| = m_i satisfying S_i(k) <= R_i(k+2) + sum_{j~i} S_j(k+1)
/// for every k (the pointwise form of S_i + 2 in R_i + U_{j~i}(S_j + 1)),
/// in sorted order. Values are fixed level by level, k descending from
/// max(R) - 2; every admissible S lies above min(R) - 1 - sum(m).
std::vector<MultisetTuple> containment_candidates(const DynkinDiagram& d, const MultisetTuple& R,
                                                  const RootVec& m);

/// The containment candidates, minus those for which some pairing E_q that
/// only involves already fixed levels is negative. Every regular S survives.
std::vector<MultisetTuple> pruned_candidates(const DynkinDiagram& d, const MultisetTuple& R,
                                             const RootVec& m);

/// Keeps the candidates accepted by pred, evaluated on `jobs` threads.
std::vector<MultisetTuple> filter_candidates(std::vector<MultisetTuple> candidates,
                                             const std::function<bool(const MultisetTuple&)>& pred,
                                             std::size_t jobs);

/// Regular S at weight mu, sorted.
std::vector<MultisetTuple> enumerate_by_regularity(const DynkinDiagram& d, const MultisetTuple& R,
                                                   const WeightVec& mu, std::size_t jobs = 1);

}  // namespace moncrystal
