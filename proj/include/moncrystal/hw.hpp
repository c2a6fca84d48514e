#pragma once

// Highest weights through multiset inclusion conditions, chain
// decompositions, the finite-dimensionality criterion and G-polynomials.
//
// Half-integers are stored doubled throughout: the root 1/2 k of a
// polynomial is kept as the integer k.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moncrystal/cartan.hpp"
#include "moncrystal/monomial.hpp"
#include "moncrystal/regularity.hpp"

namespace moncrystal {

/// Monic polynomial prod (u - r/2) over a multiset of doubled roots r.
class HalfIntPoly {
 public:
  HalfIntPoly() = default;
  explicit HalfIntPoly(Multiset doubled_roots) : roots_(std::move(doubled_roots)) {}

  const Multiset& doubled_roots() const { return roots_; }
  std::size_t degree() const { return roots_.size(); }
  bool is_one() const { return roots_.empty(); }

  HalfIntPoly& operator*=(const HalfIntPoly& o) {
    roots_ += o.roots_;
    return *this;
  }
  friend HalfIntPoly operator*(HalfIntPoly a, const HalfIntPoly& b) { return a *= b; }
  bool divides(const HalfIntPoly& o) const { return o.roots_.contains(roots_); }

  bool operator==(const HalfIntPoly&) const = default;

 private:
  Multiset roots_;
};

/// "u^3*(u - 1/2)^2", or "1".
std::string to_string(const HalfIntPoly& p);

struct HwProblem {
  DynkinDiagram d;
  ParamSet R;
  WeightVec mu;
  RootVec m;              ///< lambda - mu = sum m_i alpha_i
  bool dominant = false;  ///< mu_i >= 0 for all i
};

/// Throws NotInRootLattice, or InvalidArgument when some m_i < 0.
HwProblem make_hw_problem(const DynkinDiagram& d, const ParamSet& R, const WeightVec& mu);

/// The inclusion of multisets attached to q in B(varpi_i, 0):
///   U_{b<0} (S_j - k)^{-b}  inside  U (R_j - k)^{U_j(k-2)}  +  U_{b>0} (S_j - k)^{b}.
/// Throws InvalidArgument when qe.n != 0.
bool hw_condition(const ConditionElement& qe, const MultisetTuple& R, const MultisetTuple& S);

/// Every S with |S_i| = m_i satisfying hw_condition for all q in all
/// B(varpi_i, 0), sorted.
std::vector<MultisetTuple> enumerate_highest_weights(const HwProblem& prob, std::size_t jobs = 1);

/// P with prod(u - b) / prod(u - a) = P(u+1) / P(u), values doubled. nullopt
/// when the descending sort of A does not dominate that of B.
/// Throws SizeMismatch, CosetMismatch.
std::optional<HalfIntPoly> chain_decompose(const Multiset& A, const Multiset& B);

/// Checks prod(u - b) P(u) = P(u+1) prod(u - a) by expanding both sides
/// as integer polynomials in v = 2u.
bool chain_identity_holds(const Multiset& A, const Multiset& B, const HalfIntPoly& P);

struct FiniteDimData {
  bool finite = false;
  /// Greedy weakly decreasing injections S_i -> T_i, as (s, phi(s)) pairs.
  std::map<Node, std::vector<std::pair<int, int>>> injection;
  std::map<Node, HalfIntPoly> P;
  std::map<Node, HalfIntPoly> Q;
};

/// Weakly decreasing injection test. When it succeeds, Q_i has roots
/// T_i \ phi_i(S_i) and P_i comes from chain_decompose(S_i, phi_i(S_i)).
FiniteDimData finite_dim_test(const DynkinDiagram& d, const MultisetTuple& R,
                              const MultisetTuple& S);

/// u^{m_i} prod_a (u + k_a/2)^{s_a - 1}, where f_{i_a} acts at step a by
/// z_{i_a, k_a - 2}^{-1} starting from y_{i,0}. nullopt when the walk dies.
std::optional<HalfIntPoly> g_poly_path(const HwProblem& prob, Node i,
                                       const std::vector<Node>& path, const std::vector<int>& s);

/// g_poly_path along g.word with s_a = mu_{i_a} + 1.
HalfIntPoly g_gamma(const HwProblem& prob, const OrbitElement& g);

/// <lambda - mu, varpi_i> + <mu, varpi_i - gamma>, computed from the weights.
int g_gamma_expected_degree(const HwProblem& prob, const OrbitElement& g);

/// Every minimal word from varpi_{g.base} down to g.gamma.
std::vector<std::vector<Node>> minimal_words(const DynkinDiagram& d, const OrbitElement& g);

}  // namespace moncrystal
